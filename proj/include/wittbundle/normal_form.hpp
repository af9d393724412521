#pragma once

#include "wittbundle/mat2.hpp"

namespace witt {

// Moore's parametrization of SL(2,K): every element is uniquely
//   g1(u,t) = x(u) h(t)        (upper triangular), or
//   g2(u,t,v) = x(u) w(t) x(v) (lower-left entry -1/t != 0),
// where x(u) is unipotent upper, h(t) = diag(t, 1/t), w(t) = [[0,t],[-1/t,0]].
struct NormalForm {
    bool lower;  // false: g1(u,t); true: g2(u,t,v)
    Rat u;
    Rat t;  // nonzero
    Rat v;  // only for g2

    static NormalForm G1(Rat u, Rat t);
    static NormalForm G2(Rat u, Rat t, Rat v);

    bool operator==(const NormalForm& o) const {
        return lower == o.lower && u == o.u && t == o.t && v == o.v;
    }
};

NormalForm decompose(const Mat2& g);
Mat2 decode(const NormalForm& nf);

}  // namespace witt
