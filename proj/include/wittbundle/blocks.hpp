#pragma once

#include "wittbundle/markov.hpp"
#include "wittbundle/surface.hpp"

namespace witt {

// A prescribed boundary eigenvalue fell into the construction's finite
// exception set; the caller re-plans with a different lambda.
class ExceptionalZError : public Error {
public:
    explicit ExceptionalZError(const std::string& msg) : Error(msg) {}
};

// A genus-1 bundle with one boundary component, relative class
// [alpha] + [beta], and diagonal boundary monodromy diag(z, 1/z).
struct Genus1Block {
    BoundedSurfaceRep rep;
    Rat z;
    WittClass target;
    unsigned long lambda;  // parameters that produced the block
    unsigned long zeta;
};

// Scans lambda = seed, seed+1, ... (with z = -alpha*beta*lambda^2, zeta
// starting at 2) until the Markov-surface construction goes through.
Genus1Block genus1_block(const Rat& alpha, const Rat& beta,
                         unsigned long lambda_seed = 1);

// Same construction with the boundary eigenvalue prescribed. z/(-alpha*beta)
// must be a rational square; throws ExceptionalZError when z falls in the
// exception set for every tried zeta.
Genus1Block genus1_block_with_eigenvalue(const Rat& alpha, const Rat& beta,
                                         const Rat& z);

}  // namespace witt
