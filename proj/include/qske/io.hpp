#pragma once

// Rendering and serialization. Every number passes through a 12-significant-
// digit cap before printing so that identical inputs produce byte-identical
// output in both text and JSON modes.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "qske/analysis.hpp"
#include "qske/report.hpp"
#include "qske/sim.hpp"
#include "qske/taxonomy.hpp"

namespace qske {

using ordered_json = nlohmann::ordered_json;

inline std::string fmt12(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::string(buf);
}

inline double round12(double value) { return std::strtod(fmt12(value).c_str(), nullptr); }

// --------------------------------------------------------------------------
// JSON building blocks: complex -> [re, im], matrices -> row-major nesting

inline ordered_json json_complex(const Complex& z) {
    return ordered_json::array({round12(z.real()), round12(z.imag())});
}

inline ordered_json json_amplitudes(const StateVector& s) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) arr.push_back(json_complex(s.amplitude(i)));
    return arr;
}

inline ordered_json json_matrix(const CMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json_complex(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json to_json(const KindRecord& r) {
    ordered_json j;
    j["index"] = r.index;
    j["p"] = std::string(1, to_char(r.plaintext));
    j["c"] = std::string(1, to_char(r.ciphertext));
    j["k"] = std::string(1, to_char(r.key));
    j["e"] = std::string(1, to_char(r.encryption));
    j["d"] = std::string(1, to_char(r.decryption));
    j["existence"] = std::string(1, to_char(r.existence));
    j["rationale"] = r.rationale;
    return j;
}

inline ordered_json to_json(const TrialReport& r) {
    ordered_json j;
    j["kind"] = r.kind;
    j["parameters"] = ordered_json::object();
    for (const auto& [key, value] : r.parameters) j["parameters"][key] = value;
    j["seed"] = r.seed;
    j["algorithm_id"] = r.algorithm_id;
    j["trials"] = r.trials;
    j["successes"] = r.successes;
    if (r.max_trace_distance) j["max_trace_distance"] = round12(*r.max_trace_distance);
    j["notes"] = r.notes;
    return j;
}

inline ordered_json to_json(const MixtureReport& r) {
    ordered_json j;
    j["kind"] = r.kind;
    j["plaintext_descriptor"] = r.plaintext_descriptor;
    j["averaged_ciphertext"] = json_matrix(r.averaged_ciphertext.entries());
    j["distance_to_maximally_mixed"] = round12(r.distance_to_maximally_mixed);
    j["key_count_or_samples"] = r.key_count_or_samples;
    return j;
}

inline ordered_json to_json(const FailureDemoReport& r) {
    ordered_json j;
    j["plaintext_bit"] = r.plaintext_bit;
    j["key_preparation"] = r.key_preparation;
    j["gate_sequence"] = r.gate_sequence;
    j["stage_states"] = ordered_json::array();
    for (const auto& stage : r.stage_states) {
        ordered_json s;
        s["label"] = stage.label;
        s["num_qubits"] = stage.state.num_qubits();
        s["amplitudes"] = json_amplitudes(stage.state);
        j["stage_states"].push_back(std::move(s));
    }
    j["final_reduced"] = json_matrix(r.final_reduced.entries());
    j["distance_to_plaintext"] = round12(r.distance_to_plaintext);
    j["distance_to_maximally_mixed"] = round12(r.distance_to_maximally_mixed);
    j["verdict"] = r.verdict;
    j["notes"] = r.notes;
    return j;
}

inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------------------
// Text rendering

inline std::string complex_text(const Complex& z) {
    return "(" + fmt12(z.real()) + ", " + fmt12(z.imag()) + ")";
}

inline std::string basis_label(std::size_t index, int num_qubits) {
    std::string bits;
    for (int q = num_qubits - 1; q >= 0; --q) {
        bits += ((index >> q) & 1u) ? '1' : '0';
    }
    return "|" + bits + ">";
}

inline std::string state_text(const StateVector& s, const std::string& indent) {
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        out += indent + basis_label(i, s.num_qubits()) + ": " + complex_text(s.amplitude(i)) +
               "\n";
    }
    return out;
}

inline std::string matrix_text(const CMatrix& m, const std::string& indent) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += indent;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += "  ";
            out += complex_text(m(r, c));
        }
        out += "\n";
    }
    return out;
}

inline std::string render_table_text() {
    std::string out = "Kind  P  C  K  E  D  Existence\n";
    int exists = 0, not_exists = 0, open = 0;
    for (const auto& r : kind_table()) {
        char row[64];
        std::snprintf(row, sizeof(row), "%4d  %c  %c  %c  %c  %c  %c\n", r.index,
                      to_char(r.plaintext), to_char(r.ciphertext), to_char(r.key),
                      to_char(r.encryption), to_char(r.decryption), to_char(r.existence));
        out += row;
        switch (r.existence) {
            case Existence::Exists: ++exists; break;
            case Existence::NotExists: ++not_exists; break;
            case Existence::Open: ++open; break;
        }
    }
    char totals[64];
    std::snprintf(totals, sizeof(totals), "\nTotals: E=%d  N=%d  O=%d\n", exists, not_exists,
                  open);
    out += totals;
    return out;
}

inline ordered_json render_table_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& r : kind_table()) arr.push_back(to_json(r));
    return arr;
}

inline std::string render_trial_text(const TrialReport& r) {
    std::string out;
    out += "kind: " + std::to_string(r.kind) + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "algorithm: " + r.algorithm_id + "\n";
    out += "trials: " + std::to_string(r.trials) + "\n";
    out += "successes: " + std::to_string(r.successes) + "\n";
    if (r.max_trace_distance) {
        out += "max_trace_distance: " + fmt12(*r.max_trace_distance) + "\n";
    }
    if (!r.parameters.empty()) {
        out += "parameters:\n";
        for (const auto& [key, value] : r.parameters) {
            out += "  " + key + ": " + value + "\n";
        }
    }
    out += "notes: " + r.notes + "\n";
    return out;
}

inline std::string render_mixture_text(const MixtureReport& r) {
    std::string out;
    out += "kind: " + std::to_string(r.kind) + "\n";
    out += "plaintext: " + r.plaintext_descriptor + "\n";
    out += "keys_or_samples: " + std::to_string(r.key_count_or_samples) + "\n";
    out += "averaged_ciphertext:\n" + matrix_text(r.averaged_ciphertext.entries(), "  ");
    out += "distance_to_maximally_mixed: " + fmt12(r.distance_to_maximally_mixed) + "\n";
    return out;
}

inline std::string render_demo_text(const std::string& name, const FailureDemoReport& r) {
    std::string out;
    out += "demo: " + name + "\n";
    out += "plaintext_bit: " + std::to_string(r.plaintext_bit) + "\n";
    out += "key_preparation: " + r.key_preparation + "\n";
    out += "gate_sequence:";
    for (const auto& g : r.gate_sequence) out += " " + g + ";";
    out += "\n";
    for (const auto& stage : r.stage_states) {
        out += "stage: " + stage.label + "\n";
        out += state_text(stage.state, "  ");
    }
    out += "final_reduced:\n" + matrix_text(r.final_reduced.entries(), "  ");
    out += "distance_to_plaintext: " + fmt12(r.distance_to_plaintext) + "\n";
    out += "distance_to_maximally_mixed: " + fmt12(r.distance_to_maximally_mixed) + "\n";
    out += "verdict: " + r.verdict + "\n";
    out += "notes: " + r.notes + "\n";
    return out;
}

}  // namespace qske
