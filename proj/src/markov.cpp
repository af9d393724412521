#include "wittbundle/markov.hpp"

namespace witt {

MarkovTriple::MarkovTriple(Rat x1_, Rat x2_, Rat x3_, Rat m_)
    : x1(std::move(x1_)), x2(std::move(x2_)), x3(std::move(x3_)), m(std::move(m_)) {
    if (!satisfies_equation())
        throw DomainError("triple does not satisfy the Markov equation");
}

MarkovTriple markov_solution(const Rat& z, const Rat& zeta) {
    if (zeta == 0 || zeta == 1 || zeta == -1)
        throw DomainError("degenerate zeta in Markov solution");
    if (z == 0) throw DomainError("z must be nonzero");
    Rat zi = Rat(1) / zeta;
    Rat denom = zeta - zi;
    Rat m = z + Rat(1) / z + 2;
    Rat x2 = zeta + zi;
    Rat x3 = (z - (zeta * zeta + 1 + zi * zi) + Rat(1) / z) / denom;
    Rat x1 = 1 + zeta * x3;
    return MarkovTriple(std::move(x1), std::move(x2), std::move(x3), std::move(m));
}

}  // namespace witt
