#include "wittbundle/extension.hpp"

namespace witt {

ExtElem ext_mul(const ExtElem& p, const ExtElem& q) {
    return {p.g * q.g, p.u + q.u + witt_cocycle(p.g, q.g)};
}

ExtElem ext_inv(const ExtElem& p) {
    Mat2 gi = p.g.inverse();
    return {gi, -p.u - witt_cocycle(p.g, gi)};
}

ExtElem ext_commutator(const ExtElem& p, const ExtElem& q) {
    return ext_mul(ext_mul(p, q), ext_mul(ext_inv(p), ext_inv(q)));
}

ExtElem lifted_commutator(const Mat2& x, const Mat2& y) {
    Mat2 w = commutator(x, y);
    WittClass u = witt_cocycle(x, y) - witt_cocycle(y, x) - witt_cocycle(w, y * x);
    return {w, u};
}

}  // namespace witt
