#pragma once

// Counter-based deterministic sampling. Every sample is a pure function of
// (seed, stream, index), so splitting work across threads cannot change any
// sampled value and reports stay byte-identical for any worker count.

#include "core/geom.hpp"

#include <cstdint>

namespace samc {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t sample_u64(uint64_t seed, uint64_t stream, uint64_t index) {
    return splitmix64(splitmix64(seed ^ (stream * 0x9e3779b97f4a7c15ULL)) + index);
}

// Dyadic rational in [0,1] with denominator 2^32; the same lattice value is
// used by both scalar modes so exact and float runs see the same points.
inline uint32_t sample_lattice(uint64_t seed, uint64_t stream, uint64_t index) {
    return static_cast<uint32_t>(sample_u64(seed, stream, index) >> 32);
}

template <class S>
S lattice_to_unit(uint32_t k) {  // in [0,1]
    return S(scalar_traits<S>::from_ratio(long(k), 1)) / scalar_traits<S>::from_int(1L << 16) /
           scalar_traits<S>::from_int(1L << 16);
}

template <class S>
S lattice_to_unit_open(uint32_t k) {  // in (0,1]
    return S(scalar_traits<S>::from_ratio(long(k) + 1, 1)) / scalar_traits<S>::from_int(1L << 16) /
           scalar_traits<S>::from_int(1L << 16);
}

template <class S>
S sample_in(uint64_t seed, uint64_t stream, uint64_t index, const S& lo, const S& hi) {
    return lo + lattice_to_unit<S>(sample_lattice(seed, stream, index)) * (hi - lo);
}

}  // namespace samc
