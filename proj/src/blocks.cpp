#include "wittbundle/blocks.hpp"

#include <optional>

namespace witt {

namespace {

// One attempt at the Markov-surface construction for given (z, zeta).
// Returns nothing when z hits one of the degeneracy conditions.
std::optional<Genus1Block> try_block(const Rat& alpha, const Rat& beta,
                                     const Rat& z, unsigned long zeta_ul,
                                     unsigned long lambda_ul) {
    if (z == 0 || z == 1 || z == -1) return std::nullopt;  // tr Z = +-2
    Rat zeta(static_cast<long>(zeta_ul));
    MarkovTriple t = markov_solution(z, zeta);
    Rat denom = t.m - t.x2 * t.x2;
    if (denom == 0) return std::nullopt;
    Rat e1 = t.x1 * t.x2 - (1 + Rat(1) / z) * t.x3;
    Rat e2 = t.x1 * (1 + z) - t.x2 * t.x3;
    if (e1 == 0 || e2 == 0) return std::nullopt;

    // C = -c/(z(1+z)) * e1 * e2 must equal alpha.
    Rat c = -alpha * z * (1 + z) / (e1 * e2);
    Rat zp1 = 1 + z;
    Rat y11 = t.x2 / zp1;
    Rat y12 = (z * t.x2 * t.x2 - zp1 * zp1) / (c * zp1);
    Rat y21 = c / zp1;
    Rat y22 = z * t.x2 / zp1;
    Mat2 Y(y11, y12, y21, y22);
    Mat2 Z = Mat2::diagonal(z);

    // (m - x2^2) X = -x3 Z Y + x1 Z + (x3 - x1 x2) Y^{-1} + x1 I.
    Rat k = t.x3 - t.x1 * t.x2;
    Rat x11 = (-t.x3 * z * y11 + t.x1 * z + k * y22 + t.x1) / denom;
    Rat x12 = (-t.x3 * z * y12 - k * y12) / denom;
    Rat x21 = (-t.x3 * y21 / z - k * y21) / denom;
    Rat x22 = (-t.x3 * y22 / z + t.x1 / z + k * y11 + t.x1) / denom;
    Mat2 X(x11, x12, x21, x22);

    if (commutator(X, Y) != Z)
        throw InternalError("Markov block commutator drifted");
    BoundedSurfaceRep rep({HandlePair{X, Y}});
    WittClass target = WittClass::symbol(alpha) + WittClass::symbol(beta);
    if (relative_class(rep) != target)
        throw InternalError("Markov block relative class drifted");
    return Genus1Block{std::move(rep), z, std::move(target), lambda_ul, zeta_ul};
}

}  // namespace

Genus1Block genus1_block(const Rat& alpha, const Rat& beta,
                         unsigned long lambda_seed) {
    if (alpha == 0 || beta == 0) throw DomainError("block needs alpha, beta != 0");
    if (lambda_seed == 0) lambda_seed = 1;
    for (unsigned long zeta = 2; zeta <= 8; ++zeta) {
        for (unsigned long lam = lambda_seed; lam < lambda_seed + 200; ++lam) {
            Rat z = -alpha * beta * Rat(static_cast<long>(lam)) *
                    Rat(static_cast<long>(lam));
            if (auto blk = try_block(alpha, beta, z, zeta, lam)) return *std::move(blk);
        }
    }
    throw InternalError("no admissible lambda for genus-1 block");
}

Genus1Block genus1_block_with_eigenvalue(const Rat& alpha, const Rat& beta,
                                         const Rat& z) {
    if (alpha == 0 || beta == 0) throw DomainError("block needs alpha, beta != 0");
    if (z == 0) throw DomainError("block needs z != 0");
    if (!is_rational_square(z / (-alpha * beta)))
        throw DomainError("z is not in the square class of -alpha*beta");
    if (z == 1 || z == -1)
        throw ExceptionalZError("z = +-1 gives boundary trace +-2");
    for (unsigned long zeta = 2; zeta <= 8; ++zeta) {
        if (auto blk = try_block(alpha, beta, z, zeta, 0)) return *std::move(blk);
    }
    throw ExceptionalZError("prescribed z hits the exception set");
}

}  // namespace witt
