#include <catch2/catch_amalgamated.hpp>

#include "qske/qske.hpp"

using namespace qske;

TEST_CASE("kind indexing follows the binary layout with plaintext leading") {
    CHECK(kind_index(Nature::Classical, Nature::Classical, Nature::Classical, Nature::Classical,
                     Nature::Classical) == 1);
    CHECK(kind_index(Nature::Quantum, Nature::Quantum, Nature::Quantum, Nature::Quantum,
                     Nature::Quantum) == 32);
    CHECK(kind_index(Nature::Classical, Nature::Quantum, Nature::Classical, Nature::Quantum,
                     Nature::Quantum) == 12);

    for (int i = 1; i <= 32; ++i) {
        const KindRecord r = kind_record(i);
        CHECK(kind_index(r.plaintext, r.ciphertext, r.key, r.encryption, r.decryption) == i);
        CHECK(r.index == i);
        CHECK_FALSE(r.rationale.empty());
    }
    CHECK_THROWS_AS(kind_record(0), std::invalid_argument);
    CHECK_THROWS_AS(kind_record(33), std::invalid_argument);
}

TEST_CASE("existence classes match the registry") {
    CHECK(existence_summary() == "EOOONNNONNNENNNENNNONNNONNNENNNE");

    int exists = 0, not_exists = 0, open = 0;
    for (const auto& r : kind_table()) {
        switch (r.existence) {
            case Existence::Exists: ++exists; break;
            case Existence::NotExists: ++not_exists; break;
            case Existence::Open: ++open; break;
        }
    }
    CHECK(exists == 5);
    CHECK(not_exists == 21);
    CHECK(open == 6);

    const KindRecord row12 = kind_record(12);
    CHECK(to_char(row12.plaintext) == 'C');
    CHECK(to_char(row12.ciphertext) == 'Q');
    CHECK(to_char(row12.key) == 'C');
    CHECK(to_char(row12.encryption) == 'Q');
    CHECK(to_char(row12.decryption) == 'Q');
    CHECK(row12.existence == Existence::Exists);
}

TEST_CASE("the impossibility rule is the closed form over the quintuple") {
    for (const auto& r : kind_table()) {
        const bool classical_algorithm =
            r.encryption == Nature::Classical || r.decryption == Nature::Classical;
        const bool quantum_object = r.plaintext == Nature::Quantum ||
                                    r.ciphertext == Nature::Quantum ||
                                    r.key == Nature::Quantum;
        CHECK((r.existence == Existence::NotExists) == (classical_algorithm && quantum_object));
        if (r.existence == Existence::NotExists) {
            CHECK(r.rationale.find("impossible") != std::string::npos);
        }
    }
}

TEST_CASE("rationales name the offending combination for impossible kinds") {
    // Kind 5: classical encryption and decryption with a quantum key.
    const KindRecord r5 = kind_record(5);
    CHECK(r5.rationale.find("encryption and decryption") != std::string::npos);
    CHECK(r5.rationale.find("key") != std::string::npos);

    // Kind 11: quantum ciphertext, classical decryption only.
    const KindRecord r11 = kind_record(11);
    CHECK(r11.rationale.find("decryption") != std::string::npos);
    CHECK(r11.rationale.find("ciphertext") != std::string::npos);
    CHECK(r11.rationale.find("encryption and") == std::string::npos);
}
