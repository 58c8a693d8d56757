#pragma once

#include <bit>
#include <cstdint>

namespace kfg {

/// An element of Z_2^n as a bitmask. Bit i-1 is the exponent of the
/// generator e_i, so e_1 lives in the least significant bit. The group
/// law is XOR and the identity is mask 0.
using Mask = std::uint32_t;

constexpr int kMaxDim = 24;

/// rho(x) = sum of coordinates, as an ordinary integer (not mod 2).
inline int rho(Mask x) { return std::popcount(x); }

/// x . y as an integer (popcount of the AND).
inline int dot_count(Mask x, Mask y) { return std::popcount(x & y); }

/// x . y mod 2.
inline int dot(Mask x, Mask y) { return dot_count(x, y) & 1; }

/// Parity of sum_{j<i} x_i y_j: for each set bit i of x, count the set
/// bits of y strictly below i.
inline int reorder_parity(Mask x, Mask y) {
    int c = 0;
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        c += std::popcount(y & ((Mask{1} << i) - 1));
    }
    return c & 1;
}

}  // namespace kfg
