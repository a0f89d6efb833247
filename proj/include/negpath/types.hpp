#ifndef NEGPATH_TYPES_HPP_
#define NEGPATH_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace negpath {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Signed 128-bit integer used for weights, distances and potentials.
using Wide = __int128;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

inline constexpr Wide kWideMax = static_cast<Wide>(~static_cast<unsigned __int128>(0) >> 1);
inline constexpr Wide kWideMin = -kWideMax - 1;

/// Stand-in for an infinite distance. Far above any reachable path weight
/// (|w| <= 2^62, n < 2^31) while leaving headroom for one addition.
inline constexpr Wide kInfinity = kWideMax / 4;

enum class Direction { out, in };

inline Direction reverse(Direction d) { return d == Direction::out ? Direction::in : Direction::out; }

std::string to_string(Wide value);

/// Parses an optionally signed decimal integer. Returns nullopt on malformed input
/// or if the value does not fit into 128 bits.
std::optional<Wide> parse_wide(std::string_view text);

/// Narrowing conversion that throws std::overflow_error when out of int64 range.
std::int64_t narrow_i64(Wide value);

inline bool fits_i64(Wide value) {
    return value >= std::numeric_limits<std::int64_t>::min() &&
           value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace negpath

#endif  // NEGPATH_TYPES_HPP_
