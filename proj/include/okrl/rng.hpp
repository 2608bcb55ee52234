#pragma once

#include <cmath>
#include <cstdint>

namespace okrl {

// Counter-based random draws: every value is a pure function of
// (seed, run, step, slot), so Monte-Carlo runs can be evaluated in any
// order, on any thread, and still reproduce bit-identically.
namespace rng {

inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t run,
                         std::uint64_t step, std::uint64_t slot) {
    std::uint64_t h = mix(seed);
    h = mix(h ^ (run * 0xd1342543de82ef95ULL));
    h = mix(h ^ (step * 0xaf251af3b0f025b5ULL));
    h = mix(h ^ (slot * 0x9e3779b97f4a7c15ULL));
    return h;
}

// Uniform on (0, 1]; never 0 so it is safe under log().
inline double uniform01(std::uint64_t seed, std::uint64_t run,
                        std::uint64_t step, std::uint64_t slot) {
    const std::uint64_t h = key(seed, run, step, slot);
    return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box-Muller; consumes slots `slot` and `slot+1`.
inline double normal01(std::uint64_t seed, std::uint64_t run,
                       std::uint64_t step, std::uint64_t slot) {
    const double u1 = uniform01(seed, run, step, slot);
    const double u2 = uniform01(seed, run, step, slot + 1);
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace rng
}  // namespace okrl
