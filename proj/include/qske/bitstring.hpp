#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qske/random.hpp"

namespace qske {

// Fixed-length bit sequence. Bit 0 is the leftmost character of the text
// form and the most significant bit of the integer form, matching the
// register convention where qubit 0 carries the most significant bit.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_) {
            if (b > 1) throw std::invalid_argument("BitString: bits must be 0 or 1");
        }
    }

    static BitString parse(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("BitString: expected only '0' and '1'");
            }
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitString(std::move(bits));
    }

    static BitString from_value(std::uint64_t value, std::size_t length) {
        std::vector<std::uint8_t> bits(length);
        for (std::size_t i = 0; i < length; ++i) {
            bits[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
        }
        return BitString(std::move(bits));
    }

    static BitString random(std::size_t length, RandomSource& rng) {
        std::vector<std::uint8_t> bits(length);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
        return BitString(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_.at(i); }

    BitString operator^(const BitString& other) const {
        if (size() != other.size()) {
            throw std::invalid_argument("BitString xor: length mismatch");
        }
        std::vector<std::uint8_t> bits(size());
        for (std::size_t i = 0; i < size(); ++i) {
            bits[i] = static_cast<std::uint8_t>(bits_[i] ^ other.bits_[i]);
        }
        return BitString(std::move(bits));
    }

    int parity() const {
        int p = 0;
        for (auto b : bits_) p ^= b;
        return p;
    }

    std::uint64_t value() const {
        std::uint64_t v = 0;
        for (auto b : bits_) v = (v << 1) | b;
        return v;
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline void require_bit(int value, const char* what) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument(std::string(what) + " must be 0 or 1");
    }
}

}  // namespace qske
