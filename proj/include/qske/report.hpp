#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qske {

// Outcome of a batch of protocol round-trips. `parameters` keeps the knobs
// that produced the batch (plaintext, key sizes, mode, ...) as strings so a
// report prints the same regardless of which protocol filled it in.
struct TrialReport {
    int kind = 0;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string algorithm_id;  // RNG identifier, see RandomSource
    int trials = 0;
    int successes = 0;
    std::optional<double> max_trace_distance;
    std::string notes;
};

}  // namespace qske
