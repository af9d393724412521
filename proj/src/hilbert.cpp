#include "wittbundle/hilbert.hpp"

#include "wittbundle/factor.hpp"

namespace witt {

namespace {

// (u-1)/2 mod 2 for odd u.
int eps2(const Int& u) {
    Int r = u % 4;
    if (r < 0) r += 4;
    return r == 1 ? 0 : 1;
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) {
    Int r = u % 8;
    if (r < 0) r += 8;
    return (r == 1 || r == 7) ? 0 : 1;
}

int legendre(const Int& u, const Int& p) {
    int s = mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (s == 0) throw InternalError("legendre of non-unit");
    return s;
}

struct LocalPair {
    long val;  // p-adic valuation
    Int unit;  // integer unit part (numerator*denominator with p removed)
};

LocalPair local_pair(const Rat& a, const Int& p) {
    if (a == 0) throw DomainError("hilbert symbol of zero");
    Int num = a.get_num(), den = a.get_den(), q;
    long v = 0;
    v += static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    v -= static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    // num/den is a unit; num*den lies in the same square class of units.
    return {v, Int(num * den)};
}

}  // namespace

Place Place::prime(const Int& p) {
    if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
    return Place(p);
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
    if (v.is_real()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p();
    LocalPair la = local_pair(a, p);
    LocalPair lb = local_pair(b, p);
    int alpha = static_cast<int>(((la.val % 2) + 2) % 2);
    int beta = static_cast<int>(((lb.val % 2) + 2) % 2);
    if (p == 2) {
        int e = eps2(la.unit) * eps2(lb.unit) + alpha * omega2(lb.unit) +
                beta * omega2(la.unit);
        return (e % 2) ? -1 : 1;
    }
    int s = 1;
    if (alpha && beta && legendre(Int(-1), p) < 0) s = -s;
    if (beta) s *= legendre(la.unit, p);
    if (alpha) s *= legendre(lb.unit, p);
    return s;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
    return hilbert_symbol(Rat(a.value()), Rat(b.value()), v);
}

bool is_local_square(const Rat& a, const Place& v) {
    if (a == 0) throw DomainError("local square test of zero");
    if (v.is_real()) return a > 0;
    const Int& p = v.p();
    LocalPair la = local_pair(a, p);
    if (la.val % 2) return false;
    if (p == 2) {
        Int r = la.unit % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    return legendre(la.unit, p) > 0;
}

bool is_local_square(const SquareClass& a, const Place& v) {
    return is_local_square(Rat(a.value()), v);
}

int hasse_invariant(const DiagonalForm& f, const Place& v) {
    const auto& es = f.entries();
    int s = 1;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            s *= hilbert_symbol(es[i], es[j], v);
    return s;
}

namespace {

// Isotropy of a finite-place class from (dim, det, hasse); the standard
// Q_p casework, dimension by dimension.
bool class_isotropic_at(std::size_t dim, const SquareClass& det, int hasse,
                        const Place& v) {
    switch (dim) {
        case 0:
        case 1:
            return false;
        case 2:
            return is_local_square(det.negated(), v);
        case 3:
            return hilbert_symbol(SquareClass::of(Int(-1)), det.negated(), v) == hasse;
        case 4:
            if (!is_local_square(det, v)) return true;
            return hasse == hilbert_symbol(Rat(-1), Rat(-1), v);
        default:
            return true;
    }
}

}  // namespace

int local_anisotropic_dim(std::size_t dim, SquareClass det, int hasse,
                          const Place& v) {
    if (v.is_real()) throw DomainError("invariant form needs a finite place");
    while (dim >= 2 && class_isotropic_at(dim, det, hasse, v)) {
        // Split one hyperbolic plane: d -> -d, eps -> eps*(-1,-d).
        det = det.negated();
        hasse *= hilbert_symbol(SquareClass::of(Int(-1)), det, v);
        dim -= 2;
    }
    return static_cast<int>(dim);
}

int local_anisotropic_dim(const DiagonalForm& f, const Place& v) {
    if (v.is_real()) {
        long s = f.signature();
        return static_cast<int>(s < 0 ? -s : s);
    }
    return local_anisotropic_dim(f.dim(), f.determinant(), hasse_invariant(f, v), v);
}

bool is_locally_isotropic(const DiagonalForm& f, const Place& v) {
    if (v.is_real()) {
        long s = f.signature();
        return (s < 0 ? -s : s) < static_cast<long>(f.dim());
    }
    return local_anisotropic_dim(f, v) < static_cast<int>(f.dim());
}

}  // namespace witt
