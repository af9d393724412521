#include "wittbundle/cocycle.hpp"

#include "wittbundle/normal_form.hpp"

namespace witt {

WittClass witt_cocycle(const Mat2& x, const Mat2& y) {
    const Rat& xc = x.a21();
    const Rat& yc = y.a21();
    if (xc == 0 || yc == 0) return WittClass::zero();
    Rat mid = x.a21() * y.a11() + x.a22() * y.a21();  // (xy)21
    if (mid == 0) return WittClass::zero();
    Rat pieces[4] = {Rat(-1), xc, mid, yc};
    return WittClass::of_form(DiagonalForm({SquareClass::of_product(pieces)}));
}

WittClass moore_witt_cocycle(const Mat2& g, const Mat2& h) {
    NormalForm a = decompose(g);
    NormalForm b = decompose(h);
    if (a.lower && b.lower) {
        Rat w = -(a.v + b.u);
        if (w != 0) {
            // [w'] - [t] - [t'] + [t t' w']
            return WittClass::of_form(DiagonalForm::of_rationals(
                {w, -a.t, -b.t, a.t * b.t * w}));
        }
        // -[1] - [t] - [t'] - [t t']
        return WittClass::of_form(
            DiagonalForm::of_rationals({Rat(-1), -a.t, -b.t, -a.t * b.t}));
    }
    return pfister2(a.t, b.t);
}

WittClass nekovar_cochain(const Mat2& g) {
    if (g.a21() != 0) return WittClass::symbol(g.a21());
    return WittClass::of_form(DiagonalForm::of_rationals({Rat(1), -g.a11()}));
}

WittClass coboundary_n(const Mat2& g, const Mat2& h) {
    return nekovar_cochain(g) - nekovar_cochain(g * h) + nekovar_cochain(h);
}

}  // namespace witt
