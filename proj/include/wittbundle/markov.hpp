#pragma once

#include "wittbundle/rational.hpp"

namespace witt {

// A solution of x1^2 + x2^2 + x3^2 - x1 x2 x3 = m. For [X,Y] = Z the Fricke
// identity gives such a triple with x1 = tr X, x2 = tr Y, x3 = tr XY and
// m = tr Z + 2.
struct MarkovTriple {
    Rat x1, x2, x3, m;

    MarkovTriple(Rat x1_, Rat x2_, Rat x3_, Rat m_);

    bool satisfies_equation() const {
        return x1 * x1 + x2 * x2 + x3 * x3 - x1 * x2 * x3 == m;
    }
};

// The one-parameter family of solutions with m = z + 1/z + 2:
//   x2 = zeta + 1/zeta,
//   x3 = (z - (zeta^2 + 1 + zeta^-2) + 1/z) / (zeta - 1/zeta),
//   x1 = 1 + zeta * x3.
// Requires zeta not in {0, 1, -1} and z != 0.
MarkovTriple markov_solution(const Rat& z, const Rat& zeta);

}  // namespace witt
