#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wittbundle/realize.hpp"

namespace witt {

// Deterministic generator for the randomized suites. All draws derive from
// splitmix64 over the seed, so a (seed, iters, height) triple fixes every
// report byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    long int_in(long lo, long hi);
    Int nonzero_int(long height);
    Rat nonzero_rat(long height);

    // Random element of SL(2,Q): entries a,b,c drawn with a != 0, then
    // d = (1+bc)/a makes the determinant exactly 1.
    Mat2 mat(long height);

    // Commuting pairs: powers of a common matrix, or a conjugated diagonal
    // pair, alternating.
    std::pair<Mat2, Mat2> commuting_pair(long height);

    // Random element of I^2: a short sum of 2-fold Pfister classes.
    WittClass i2_class(long height);

    // Random bounded rep of the given genus.
    BoundedSurfaceRep bounded_rep(std::size_t genus, long height);

    // Random closed rep (genus 2 or 3) built by gluing.
    ClosedSurfaceRep closed_rep(long height);

private:
    std::uint64_t state_;
};

struct SuiteResult {
    std::string name;
    unsigned long iters;
    unsigned long passes;
};

// The randomized identity suites behind `selftest`: cocycle law,
// equicommutativity, the Moore/Witt comparison, the closed-form lower-cell
// formula, Hilbert reciprocity, normal-form round trips, the gluing and
// twist calculus, and the symbol-relation images in W(Q).
std::vector<SuiteResult> run_selftest(unsigned long iters, std::uint64_t seed,
                                      long height);

}  // namespace witt
