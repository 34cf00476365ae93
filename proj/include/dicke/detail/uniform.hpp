// uniform.hpp — Deterministic uniform draws straight from the generator bits,
// identical across standard-library implementations.
#pragma once

#include <random>

namespace dicke::detail {

inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

} // namespace dicke::detail
