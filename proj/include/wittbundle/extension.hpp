#pragma once

#include "wittbundle/cocycle.hpp"

namespace witt {

// An element of the central extension of SL(2,Q) by W(Q) defined by the
// Witt cocycle: (g,u)*(g',u') = (gg', u + u' + w(g,g')). The standard lift
// of g is (g, 0).
struct ExtElem {
    Mat2 g;
    WittClass u;

    static ExtElem lift(const Mat2& g) { return {g, WittClass::zero()}; }
    static ExtElem identity() { return {Mat2::identity(), WittClass::zero()}; }
};

ExtElem ext_mul(const ExtElem& p, const ExtElem& q);
ExtElem ext_inv(const ExtElem& p);

// [p,q] computed through the group law.
ExtElem ext_commutator(const ExtElem& p, const ExtElem& q);

// The commutator of lifts, via the closed genus-1 identity
// [X,Y]-bar = ([X,Y], w(X,Y) - w(Y,X) - w([X,Y], YX)). Equal to
// ext_commutator(lift X, lift Y) but with smaller intermediate entries.
ExtElem lifted_commutator(const Mat2& x, const Mat2& y);

}  // namespace witt
