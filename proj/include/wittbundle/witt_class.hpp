#pragma once

#include <map>

#include "wittbundle/diagonal_form.hpp"
#include "wittbundle/hilbert.hpp"

namespace witt {

// Norm of a diagonal form's Witt class: the dimension of its anisotropic
// kernel over Q, computed as the maximum of the local anisotropic dimensions
// over the real place, 2, and the odd primes dividing an entry.
int form_norm(const DiagonalForm& f);

// Class invariants that pin a Witt class over Q: signature, determinant
// square class and the finite places with Hasse invariant -1 (all for the
// anisotropic kernel, whose dimension equals the norm).
struct ClassInvariants {
    std::size_t dim = 0;
    long signature = 0;
    SquareClass det;
    std::map<Int, int> hasse;  // finite p -> Hasse invariant; +1 if absent

    int hasse_at(const Int& p) const {
        auto it = hasse.find(p);
        return it == hasse.end() ? 1 : it->second;
    }
};

ClassInvariants kernel_invariants(const DiagonalForm& f);

// Builds a diagonal form with exactly the given invariants (classical
// existence theorem, made constructive). Deterministic: equal invariants
// give identical forms.
DiagonalForm synthesize_form(const ClassInvariants& inv);

// An element of W(Q), held as the canonical anisotropic diagonal
// representative. Equality of classes is structural equality of reps.
class WittClass {
public:
    WittClass() = default;  // the zero class

    static WittClass zero() { return WittClass(); }
    static WittClass of_form(const DiagonalForm& f);
    static WittClass symbol(const Rat& a);  // [a], a != 0

    const DiagonalForm& rep() const { return rep_; }
    bool is_zero() const { return rep_.empty(); }

    WittClass operator+(const WittClass& o) const;
    WittClass operator-() const;
    WittClass operator-(const WittClass& o) const { return *this + (-o); }

    WittClass scaled(const SquareClass& a) const;

    std::size_t norm() const { return rep_.dim(); }
    long signature() const { return rep_.signature(); }
    bool in_I2() const;

    bool operator==(const WittClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const WittClass& o) const { return !(*this == o); }

    std::string str() const { return rep_.str(); }

private:
    explicit WittClass(DiagonalForm canonical) : rep_(std::move(canonical)) {}
    DiagonalForm rep_;
};

// <<a,b>> = [1] - [a] - [b] + [ab]; the 2-fold Pfister generators of I^2.
WittClass pfister2(const Rat& a, const Rat& b);

}  // namespace witt
