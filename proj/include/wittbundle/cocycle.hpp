#pragma once

#include "wittbundle/mat2.hpp"
#include "wittbundle/witt_class.hpp"

namespace witt {

// The Witt cocycle w(x,y) = [-x21 * (xy)21 * y21], with [0] read as the
// zero class.
WittClass witt_cocycle(const Mat2& x, const Mat2& y);

// The image of the (corrected) Moore cocycle in W(Q), in the normal-form
// parametrization; always lies in I^2.
WittClass moore_witt_cocycle(const Mat2& g, const Mat2& h);

// The correcting cochain: n(g) = [g21] if g21 != 0, else [1] - [g11].
WittClass nekovar_cochain(const Mat2& g);

// (delta n)(g,h) = n(g) - n(gh) + n(h).
WittClass coboundary_n(const Mat2& g, const Mat2& h);

}  // namespace witt
