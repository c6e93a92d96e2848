#pragma once

// Deterministic randomness. The engine is std::mt19937_64, whose output
// stream is fixed by the C++ standard, so a (seed, algorithm_id) pair
// reproduces byte-identical runs on any platform. Raw engine words are
// converted to doubles and bounded integers here rather than through
// std::uniform_*_distribution, whose results are implementation-defined.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qske {

class RandomSource {
public:
    static constexpr const char* kAlgorithmId = "mt19937_64";

    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::string algorithm_id() const { return kAlgorithmId; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Uniform integer in [0, bound) by rejection, bias-free.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Independent child stream; splitmix64 of (seed, stream index).
    RandomSource derive(std::uint64_t stream) const {
        std::uint64_t z = seed_ + (stream + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return RandomSource(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace qske
