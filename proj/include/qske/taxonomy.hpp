#pragma once

// The 32-way classification of symmetric-key encryption schemes by which of
// the five ingredients -- plaintext, ciphertext, key, encryption algorithm,
// decryption algorithm -- is classical or quantum.

#include <stdexcept>
#include <string>
#include <vector>

namespace qske {

enum class Nature { Classical, Quantum };
enum class Existence { Exists, NotExists, Open };

inline char to_char(Nature n) { return n == Nature::Classical ? 'C' : 'Q'; }
inline char to_char(Existence e) {
    switch (e) {
        case Existence::Exists: return 'E';
        case Existence::NotExists: return 'N';
        case Existence::Open: return 'O';
    }
    throw std::invalid_argument("bad existence value");
}

struct KindRecord {
    int index = 0;  // 1..32
    Nature plaintext = Nature::Classical;
    Nature ciphertext = Nature::Classical;
    Nature key = Nature::Classical;
    Nature encryption = Nature::Classical;
    Nature decryption = Nature::Classical;
    Existence existence = Existence::Open;
    std::string rationale;
};

// Index layout: kind = 1 + binary(P,C,K,E,D), plaintext most significant,
// Classical = 0, Quantum = 1. Kind 1 is the all-classical scheme.
inline int kind_index(Nature p, Nature c, Nature k, Nature e, Nature d) {
    auto bit = [](Nature n) { return n == Nature::Quantum ? 1 : 0; };
    return 1 + (bit(p) << 4 | bit(c) << 3 | bit(k) << 2 | bit(e) << 1 | bit(d));
}

namespace detail {

inline std::string impossible_rationale(const KindRecord& r) {
    std::string algs;
    if (r.encryption == Nature::Classical) algs = "encryption";
    if (r.decryption == Nature::Classical) {
        if (!algs.empty()) algs += " and ";
        algs += "decryption";
    }
    std::string objs;
    auto append = [&objs](const char* name) {
        if (!objs.empty()) objs += "/";
        objs += name;
    };
    if (r.plaintext == Nature::Quantum) append("plaintext");
    if (r.ciphertext == Nature::Quantum) append("ciphertext");
    if (r.key == Nature::Quantum) append("key");
    return "impossible: classical " + algs + " cannot process the quantum " + objs;
}

inline std::string exists_rationale(int index) {
    switch (index) {
        case 1: return "exists: one-time pad; XOR with a uniform single-use key";
        case 12: return "exists: encode each plaintext bit as Y^k2 H^k1 |x> under two classical key bits";
        case 16: return "exists: halves of an entangled key feed CNOTs that hide and recover the plaintext";
        case 28: return "exists: conjugate the quantum plaintext by Z^k1 X^k2 under two classical key bits";
        case 32: return "exists: a quantum key register drives CNOT coupling onto the plaintext";
    }
    throw std::logic_error("no exhibited construction for this kind");
}

}  // namespace detail

inline KindRecord kind_record(int index) {
    if (index < 1 || index > 32) throw std::invalid_argument("kind index must be in 1..32");
    const int bits = index - 1;
    auto nature = [bits](int pos) {
        return ((bits >> pos) & 1) ? Nature::Quantum : Nature::Classical;
    };
    KindRecord r;
    r.index = index;
    r.plaintext = nature(4);
    r.ciphertext = nature(3);
    r.key = nature(2);
    r.encryption = nature(1);
    r.decryption = nature(0);

    const bool classical_algorithm =
        r.encryption == Nature::Classical || r.decryption == Nature::Classical;
    const bool quantum_object = r.plaintext == Nature::Quantum ||
                                r.ciphertext == Nature::Quantum || r.key == Nature::Quantum;
    if (classical_algorithm && quantum_object) {
        r.existence = Existence::NotExists;
        r.rationale = detail::impossible_rationale(r);
    } else if (index == 1 || index == 12 || index == 16 || index == 28 || index == 32) {
        r.existence = Existence::Exists;
        r.rationale = detail::exists_rationale(index);
    } else {
        r.existence = Existence::Open;
        r.rationale =
            "open: candidate constructions exist, but no secure protocol of this shape is known";
    }
    return r;
}

inline const std::vector<KindRecord>& kind_table() {
    static const std::vector<KindRecord> table = [] {
        std::vector<KindRecord> t;
        t.reserve(32);
        for (int i = 1; i <= 32; ++i) t.push_back(kind_record(i));
        return t;
    }();
    return table;
}

// 32 characters, kind 1 first: 'E', 'N', or 'O' per kind.
inline std::string existence_summary() {
    std::string s;
    for (const auto& r : kind_table()) s += to_char(r.existence);
    return s;
}

}  // namespace qske
