#include "wittbundle/square_class.hpp"

#include "wittbundle/factor.hpp"

namespace witt {

SquareClass SquareClass::of(const Rat& r) {
    if (r == 0) throw DomainError("square class of zero");
    Rat pieces[1] = {r};
    return of_product(pieces);
}

SquareClass SquareClass::of(const Int& n) {
    if (n == 0) throw DomainError("square class of zero");
    return SquareClass(squarefree_part(n));
}

SquareClass SquareClass::of_product(std::span<const Rat> rs) {
    int sign = 1;
    CoprimeRefiner refiner;
    for (const Rat& r : rs) {
        if (r == 0) throw DomainError("square class of zero");
        sign *= sgn(r);
        if (r.get_num() != 1 && r.get_num() != -1) refiner.add(r.get_num(), 1);
        if (r.get_den() != 1) refiner.add(r.get_den(), 1);
    }
    Int out = 1;
    for (const auto& [atom, exp] : refiner.atoms()) {
        if (exp % 2 == 0) continue;
        out *= squarefree_part(atom);
    }
    return SquareClass(sign < 0 ? Int(-out) : out);
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    Int g = gcd(value_, o.value_);
    // Both factors squarefree: the product's square part is exactly g^2.
    return SquareClass((value_ / g) * (o.value_ / g));
}

SquareClass SquareClass::negated() const { return SquareClass(Int(-value_)); }

}  // namespace witt
