#ifndef NEGPATH_RNG_HPP_
#define NEGPATH_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "negpath/types.hpp"

namespace negpath {

/// splitmix64 finalizer of (master ^ index * golden ratio); used to derive
/// independent per-trial and per-attempt seeds.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master ^ (index * 0x9E3779B97F4A7C15ULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * Seeded generator with platform-independent derived distributions.
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard; the standard distributions are not, so bounded draws are done here.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection.
        unsigned __int128 prod = static_cast<unsigned __int128>(next()) * bound;
        std::uint64_t low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                prod = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    /// Uniform in [0, bound) for bounds beyond 64 bits.
    Wide below_wide(Wide bound) {
        if (bound <= static_cast<Wide>(UINT64_MAX))
            return static_cast<Wide>(below(static_cast<std::uint64_t>(bound)));
        const auto ubound = static_cast<unsigned __int128>(bound);
        const unsigned __int128 limit = ~static_cast<unsigned __int128>(0) - (~static_cast<unsigned __int128>(0) % ubound);
        for (;;) {
            const unsigned __int128 x = (static_cast<unsigned __int128>(next()) << 64) | next();
            if (x < limit)
                return static_cast<Wide>(x % ubound);
        }
    }

    /// Uniform integer in [lo, hi); requires lo < hi.
    Wide uniform(Wide lo, Wide hi) { return lo + below_wide(hi - lo); }

    /// True with probability num/den (clamped to [0, 1]).
    bool bernoulli(unsigned __int128 num, unsigned __int128 den) {
        if (num >= den)
            return true;
        if (num == 0)
            return false;
        return static_cast<unsigned __int128>(below_wide(static_cast<Wide>(den))) < num;
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace negpath

#endif  // NEGPATH_RNG_HPP_
