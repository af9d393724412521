#pragma once

#include "wittbundle/diagonal_form.hpp"
#include "wittbundle/place.hpp"

namespace witt {

// (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the
// completion at v. Both arguments nonzero.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

// Whether a is a square in the completion at v.
bool is_local_square(const Rat& a, const Place& v);
bool is_local_square(const SquareClass& a, const Place& v);

// prod_{i<j} (a_i, a_j)_v over the entries of f; +1 on forms of dim <= 1.
int hasse_invariant(const DiagonalForm& f, const Place& v);

// Dimension of the anisotropic kernel of f over the completion at v. At the
// real place this is |signature|; at a finite place it lies in {0,...,4}.
int local_anisotropic_dim(const DiagonalForm& f, const Place& v);

// Same computation from class invariants alone: dimension, determinant
// square class, and Hasse invariant at a finite place v.
int local_anisotropic_dim(std::size_t dim, SquareClass det, int hasse,
                          const Place& v);

// Whether the form is isotropic over the completion at v (represents zero
// nontrivially).
bool is_locally_isotropic(const DiagonalForm& f, const Place& v);

}  // namespace witt
