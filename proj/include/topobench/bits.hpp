#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace topobench {

// Bit-ordering convention used everywhere in this project: basis index b
// encodes bit x_i = (b >> i) & 1 for qubit i, and textual bitstrings are
// written with qubit 0 as the LEFTMOST character. So for n = 2 the basis
// index 2 (binary 10) is the bitstring "01": x_0 = 0, x_1 = 1.

inline std::vector<int> bits_from_index(std::uint64_t b, int n) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = static_cast<int>((b >> i) & 1U);
    return bits;
}

inline std::string bitstring_from_index(std::uint64_t b, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((b >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline std::vector<int> bits_from_string(const std::string& s) {
    std::vector<int> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring contains '" +
                                        std::string(1, c) + "'");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return bits;
}

inline std::string string_from_bits(const std::vector<int>& bits) {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] != 0) s[i] = '1';
    return s;
}

inline std::uint64_t index_from_bitstring(const std::string& s) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("bitstring contains '" +
                                        std::string(1, s[i]) + "'");
        if (s[i] == '1') b |= (1ULL << i);
    }
    return b;
}

// True iff the textual bitstring of a sorts lexicographically before that
// of b under the convention above (bit 0 is the leftmost character).
inline bool bitstring_index_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int i = 0; i < n; ++i) {
        unsigned ba = (a >> i) & 1U;
        unsigned bb = (b >> i) & 1U;
        if (ba != bb) return ba < bb;
    }
    return false;
}

}  // namespace topobench
