#pragma once

#include "symsemi/sparse.hpp"

#include <random>

namespace testutil {

using symsemi::Rational;
using symsemi::SparseMat;

/// Small-integer matrix with roughly `fill` of its entries nonzero.
inline SparseMat random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, double fill = 0.5, int range = 3) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> v(-range, range);
    SparseMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (u(rng) < fill) m.set(i, j, Rational(v(rng), 1 + static_cast<long>(u(rng) * 3)));
    return m;
}

} // namespace testutil
