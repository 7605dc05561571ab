#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

// Portable distributions over std::mt19937_64: the standard library's
// distributions are implementation-defined, so seeded streams would differ
// between toolchains.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream seed for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

/// Uniform in [0, bound), bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0)
        return rng() & (bound - 1);
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit)
            return v % bound;
    }
}

/// Uniform in [0, bound) for arbitrary-precision bound >= 1.
inline boost::multiprecision::cpp_int uniform_below(Rng& rng, const boost::multiprecision::cpp_int& bound) {
    using boost::multiprecision::cpp_int;
    if (bound <= UINT64_MAX)
        return cpp_int(uniform_below(rng, static_cast<std::uint64_t>(bound)));
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        cpp_int v = 0;
        for (unsigned w = 0; w < words; ++w) {
            v <<= 64;
            v |= rng();
        }
        v >>= words * 64 - bits;
        if (v < bound)
            return v;
    }
}

/// Uniform double in (0, 1].
inline double uniform_open_closed(Rng& rng) {
    return 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace ferrers
