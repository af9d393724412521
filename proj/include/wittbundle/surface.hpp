#pragma once

#include <vector>

#include "wittbundle/extension.hpp"

namespace witt {

class RelatorError : public Error {
public:
    explicit RelatorError(const std::string& msg) : Error(msg) {}
};

class BoundaryMismatchError : public Error {
public:
    explicit BoundaryMismatchError(const std::string& msg) : Error(msg) {}
};

struct HandlePair {
    Mat2 A;
    Mat2 B;
};

// Monodromy data of a flat SL(2,Q)-bundle over the closed oriented surface
// of genus g: pairs (A_i,B_i) with prod [A_i,B_i] = I exactly.
class ClosedSurfaceRep {
public:
    explicit ClosedSurfaceRep(std::vector<HandlePair> pairs);

    std::size_t genus() const { return pairs_.size(); }
    const std::vector<HandlePair>& pairs() const { return pairs_; }

private:
    std::vector<HandlePair> pairs_;
};

// Same over the genus-g surface with one boundary component: the boundary
// monodromy is prod [X_i,Y_i], framed by its standard lift.
class BoundedSurfaceRep {
public:
    explicit BoundedSurfaceRep(std::vector<HandlePair> pairs);

    std::size_t genus() const { return pairs_.size(); }
    const std::vector<HandlePair>& pairs() const { return pairs_; }
    const Mat2& boundary() const { return boundary_; }

private:
    std::vector<HandlePair> pairs_;
    Mat2 boundary_;
};

// <w(P),[Sigma]>: the Witt part of prod_i [A_i-bar, B_i-bar] in the central
// extension.
WittClass evaluate_closed(const ClosedSurfaceRep& r);

// The same value from the Delta-complex of the 4g-gon: the signed sum of
// cocycle values over the triangles, with the edge word a1 b1 a1^-1 b1^-1...
// Retained as an independent cross-check of evaluate_closed.
WittClass evaluate_closed_delta(const ClosedSurfaceRep& r);

// Relative class with standard boundary framing:
// prod_i [X_i-bar, Y_i-bar] * (W,0)^{-1}.
WittClass relative_class(const BoundedSurfaceRep& b);

// Glue two bounded bundles with equal boundary monodromy along their
// boundaries (the second with reversed orientation). Evaluates to
// relative_class(b1) - relative_class(b2).
ClosedSurfaceRep glue_closed(const BoundedSurfaceRep& b1, const BoundedSurfaceRep& b2);

// Conjugates every monodromy by A. Shifts the relative class by
// w(A,W) - w(AWA^{-1}, A).
BoundedSurfaceRep twist_bounded(const BoundedSurfaceRep& b, const Mat2& A);

// Twist along the non-separating loop b_{handle} by V (which must commute
// with B_{handle}): replaces A_{handle} by A_{handle} * V. Leaves
// evaluate_closed unchanged. Handles are 1-based.
ClosedSurfaceRep twist_closed(const ClosedSurfaceRep& r, std::size_t handle,
                              const Mat2& V);

// Boundary connected sum: concatenated handles, boundary W * W'. Relative
// class becomes c(b1) + c(b2) + w(W, W').
BoundedSurfaceRep vee(const BoundedSurfaceRep& b1, const BoundedSurfaceRep& b2);

// Conjugates every monodromy by A; evaluate_closed is unchanged.
ClosedSurfaceRep conjugate_rep(const ClosedSurfaceRep& r, const Mat2& A);

}  // namespace witt
