#pragma once

#include <string>

#include "wittbundle/blocks.hpp"

namespace witt {

class NormBoundError : public Error {
public:
    explicit NormBoundError(const std::string& msg) : Error(msg) {}
};

// Twisted boundary connected sum (one induction step of the realization):
// conjugates prev and block so their boundaries compose to a diagonal
// matrix, inserting the class [alpha] + [beta]. Both boundaries must be
// diagonal and != +-I. Returns the sum, its boundary eigenvalue z, and the
// lambda the scan settled on.
struct VeeStep {
    BoundedSurfaceRep rep;
    Rat z;
    unsigned long lambda;
};

VeeStep vee_with_twists(const BoundedSurfaceRep& prev, const Genus1Block& block,
                        const Rat& alpha, const Rat& beta,
                        unsigned long lambda_seed = 1);

// Splits q (in I^2, norm <= 4g-4) into 4g-4 symbols: g (alpha_i, beta_i)
// pairs and g-2 (gamma_j, delta_j) pairs, padded with ([1],[-1]); the
// product of all symbols is a square.
struct TargetDecomposition {
    std::vector<std::pair<Rat, Rat>> alpha_beta;   // size g
    std::vector<std::pair<Rat, Rat>> gamma_delta;  // size g-2
};

TargetDecomposition decompose_target(const WittClass& q, std::size_t genus);

struct RealizeResult {
    ClosedSurfaceRep rep;
    WittClass target;
    WittClass evaluated;
    std::vector<std::string> lambda_log;
};

// Constructs a closed genus-g representation whose Witt class is exactly q.
// Requires g >= 2, q in I^2 and norm(q) <= 4g-4.
RealizeResult realize(const WittClass& q, std::size_t genus);

}  // namespace witt
