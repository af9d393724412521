#include "wittbundle/normal_form.hpp"

namespace witt {

NormalForm NormalForm::G1(Rat u, Rat t) {
    if (t == 0) throw DomainError("g1 needs t != 0");
    return NormalForm{false, std::move(u), std::move(t), Rat(0)};
}

NormalForm NormalForm::G2(Rat u, Rat t, Rat v) {
    if (t == 0) throw DomainError("g2 needs t != 0");
    return NormalForm{true, std::move(u), std::move(t), std::move(v)};
}

NormalForm decompose(const Mat2& g) {
    if (g.a21() == 0) {
        // g = x(u) h(t) = [[t, u/t],[0, 1/t]]
        return NormalForm::G1(g.a12() * g.a11(), g.a11());
    }
    // g = x(u) w(t) x(v) = [[-u/t, t - uv/t],[-1/t, -v/t]]
    Rat t = Rat(-1) / g.a21();
    return NormalForm::G2(g.a11() / g.a21(), t, g.a22() / g.a21());
}

Mat2 decode(const NormalForm& nf) {
    if (!nf.lower) {
        return Mat2(nf.t, nf.u / nf.t, Rat(0), Rat(1) / nf.t);
    }
    return Mat2(-nf.u / nf.t, nf.t - nf.u * nf.v / nf.t, Rat(-1) / nf.t,
                -nf.v / nf.t);
}

}  // namespace witt
