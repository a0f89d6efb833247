#ifndef NEGPATH_FIXED_MATH_HPP_
#define NEGPATH_FIXED_MATH_HPP_

#include <cstdint>

namespace negpath::fixed {

/// Fixed-point scale used for logarithms: value = raw / 2^20.
inline constexpr int kFracBits = 20;
inline constexpr std::int64_t kOne = std::int64_t{1} << kFracBits;

/// floor(ln(x) * 2^20) up to one unit in the last place, computed in integer
/// arithmetic only so seeded runs agree across platforms. Requires x >= 1.
constexpr std::int64_t ln(std::uint64_t x) {
    if (x <= 1)
        return 0;
    int k = 63;
    while (((x >> k) & 1U) == 0)
        --k;
    // Mantissa in [1, 2) with 62 fraction bits.
    unsigned __int128 z = k <= 62 ? static_cast<unsigned __int128>(x) << (62 - k)
                                  : static_cast<unsigned __int128>(x) >> (k - 62);
    const unsigned __int128 two = static_cast<unsigned __int128>(1) << 63;
    std::uint64_t frac = 0;
    for (int i = 1; i <= 32; ++i) {
        z = (z * z) >> 62;
        if (z >= two) {
            z >>= 1;
            frac |= std::uint64_t{1} << (32 - i);
        }
    }
    const std::uint64_t lg_q32 = (static_cast<std::uint64_t>(k) << 32) | frac;
    constexpr std::uint64_t kLn2Q62 = 0x2C5C85FDF473DE6AULL;
    const unsigned __int128 prod = static_cast<unsigned __int128>(lg_q32) * kLn2Q62;
    return static_cast<std::int64_t>(prod >> (62 + 32 - kFracBits));
}

/// ln of a fixed-point argument raw / 2^20; requires raw >= 2^20.
constexpr std::int64_t ln_of_fixed(std::uint64_t raw) {
    constexpr std::int64_t kLn2 = ln(2);
    return ln(raw) - kFracBits * kLn2;
}

/// ceil(log2(log2(m))) for m >= 2, defined as 0 for m <= 2.
constexpr int ceil_lg_lg(std::uint64_t m) {
    if (m <= 2)
        return 0;
    // ceil(lg m) first, then ceil(lg of that); lg lg m <= j iff m <= 2^(2^j).
    int j = 0;
    while (j < 6 && m > (std::uint64_t{1} << (1U << j)))
        ++j;
    return j;
}

}  // namespace negpath::fixed

#endif  // NEGPATH_FIXED_MATH_HPP_
