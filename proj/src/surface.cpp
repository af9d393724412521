#include "wittbundle/surface.hpp"

namespace witt {

namespace {

Mat2 relator_product(const std::vector<HandlePair>& pairs) {
    Mat2 w;
    for (const auto& [a, b] : pairs) w = w * commutator(a, b);
    return w;
}

}  // namespace

ClosedSurfaceRep::ClosedSurfaceRep(std::vector<HandlePair> pairs)
    : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw DomainError("closed rep needs genus >= 1");
    if (!relator_product(pairs_).is_identity())
        throw RelatorError("surface relator violated: prod [A_i,B_i] != I");
}

BoundedSurfaceRep::BoundedSurfaceRep(std::vector<HandlePair> pairs)
    : pairs_(std::move(pairs)), boundary_(relator_product(pairs_)) {
    if (pairs_.empty()) throw DomainError("bounded rep needs genus >= 1");
}

namespace {

// prod_i [X_i-bar, Y_i-bar] over the handles, in the extension.
ExtElem handle_product(const std::vector<HandlePair>& pairs) {
    ExtElem acc = ExtElem::identity();
    for (const auto& [a, b] : pairs) acc = ext_mul(acc, lifted_commutator(a, b));
    return acc;
}

}  // namespace

WittClass evaluate_closed(const ClosedSurfaceRep& r) {
    ExtElem p = handle_product(r.pairs());
    if (!p.g.is_identity()) throw InternalError("relator drifted during evaluation");
    return p.u;
}

WittClass evaluate_closed_delta(const ClosedSurfaceRep& r) {
    std::size_t g = r.genus();
    std::size_t edges = 4 * g;
    std::vector<const Mat2*> base(edges);
    std::vector<int> eps(edges);
    for (std::size_t i = 0; i < g; ++i) {
        base[4 * i] = &r.pairs()[i].A;
        base[4 * i + 1] = &r.pairs()[i].B;
        base[4 * i + 2] = &r.pairs()[i].A;
        base[4 * i + 3] = &r.pairs()[i].B;
        eps[4 * i] = 1;
        eps[4 * i + 1] = 1;
        eps[4 * i + 2] = -1;
        eps[4 * i + 3] = -1;
    }
    // Partial products g_i = C_0^{e_0} ... C_{i-1}^{e_{i-1}} for i = 0..4g-1.
    std::vector<Mat2> partial(edges + 1);
    for (std::size_t i = 0; i < edges; ++i) {
        Mat2 step = (eps[i] > 0) ? *base[i] : base[i]->inverse();
        partial[i + 1] = partial[i] * step;
    }
    WittClass total;
    for (std::size_t i = 1; i + 1 < edges; ++i) {  // triangles 1..4g-2
        if (eps[i] > 0) {
            total = total + witt_cocycle(partial[i], *base[i]);
        } else {
            total = total - witt_cocycle(partial[i + 1], *base[i]);
        }
    }
    return total;
}

WittClass relative_class(const BoundedSurfaceRep& b) {
    ExtElem p = handle_product(b.pairs());
    if (p.g != b.boundary())
        throw InternalError("boundary drifted during evaluation");
    // (W,u) * (W,0)^{-1} = (I,u).
    return p.u;
}

ClosedSurfaceRep glue_closed(const BoundedSurfaceRep& b1, const BoundedSurfaceRep& b2) {
    if (b1.boundary() != b2.boundary())
        throw BoundaryMismatchError("glue needs equal boundary monodromies");
    std::vector<HandlePair> pairs = b1.pairs();
    for (auto it = b2.pairs().rbegin(); it != b2.pairs().rend(); ++it) {
        // Orientation reversal swaps the roles within each pair.
        pairs.push_back({it->B, it->A});
    }
    return ClosedSurfaceRep(std::move(pairs));
}

BoundedSurfaceRep twist_bounded(const BoundedSurfaceRep& b, const Mat2& A) {
    std::vector<HandlePair> pairs;
    pairs.reserve(b.pairs().size());
    for (const auto& [x, y] : b.pairs()) pairs.push_back({conj(A, x), conj(A, y)});
    return BoundedSurfaceRep(std::move(pairs));
}

ClosedSurfaceRep twist_closed(const ClosedSurfaceRep& r, std::size_t handle,
                              const Mat2& V) {
    if (handle == 0 || handle > r.genus())
        throw DomainError("twist handle out of range");
    const Mat2& L = r.pairs()[handle - 1].B;
    if (!V.commutes_with(L))
        throw DomainError("twist element must commute with the loop monodromy");
    std::vector<HandlePair> pairs = r.pairs();
    pairs[handle - 1].A = pairs[handle - 1].A * V;
    return ClosedSurfaceRep(std::move(pairs));
}

BoundedSurfaceRep vee(const BoundedSurfaceRep& b1, const BoundedSurfaceRep& b2) {
    std::vector<HandlePair> pairs = b1.pairs();
    pairs.insert(pairs.end(), b2.pairs().begin(), b2.pairs().end());
    return BoundedSurfaceRep(std::move(pairs));
}

ClosedSurfaceRep conjugate_rep(const ClosedSurfaceRep& r, const Mat2& A) {
    std::vector<HandlePair> pairs;
    pairs.reserve(r.pairs().size());
    for (const auto& [x, y] : r.pairs()) pairs.push_back({conj(A, x), conj(A, y)});
    return ClosedSurfaceRep(std::move(pairs));
}

}  // namespace witt
