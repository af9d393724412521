#pragma once

#include <utility>
#include <vector>

#include "wittbundle/rational.hpp"

namespace witt {

struct PrimePower {
    Int prime;
    long exp;
};

bool is_prime(const Int& n);

// Prime factorization of |n|, n != 0. Primes ascending.
std::vector<PrimePower> factorize(const Int& n);

// Signed squarefree kernel: n = squarefree_part(n) * s^2 with the result
// carrying the sign of n.
Int squarefree_part(const Int& n);

// Odd primes dividing n (n != 0).
std::vector<Int> odd_prime_support(const Int& n);

// Pairwise-coprime refinement of a multiset of integers with exponents.
// Used to cancel shared square structure across a product before any
// factorization is attempted.
class CoprimeRefiner {
public:
    void add(const Int& value, long exp);  // value != 0; sign ignored
    const std::vector<std::pair<Int, long>>& atoms() const { return atoms_; }

private:
    std::vector<std::pair<Int, long>> atoms_;  // pairwise coprime, > 1
};

}  // namespace witt
