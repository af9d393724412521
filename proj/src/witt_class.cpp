#include "wittbundle/witt_class.hpp"

#include <algorithm>
#include <set>

#include "wittbundle/factor.hpp"

namespace witt {

namespace {

int eps_at(const std::map<Int, int>& eps, const Int& p) {
    auto it = eps.find(p);
    return it == eps.end() ? 1 : it->second;
}

// The finite places that can carry nontrivial local data for f: 2 and the
// odd primes dividing an entry.
std::set<Int> relevant_primes(const DiagonalForm& f) {
    std::set<Int> ps;
    ps.insert(Int(2));
    for (const auto& e : f.entries())
        for (const Int& p : odd_prime_support(e.value())) ps.insert(p);
    return ps;
}

Int smallest_nonresidue(const Int& p) {
    for (Int q = 2;; ++q) {
        if (mpz_legendre(q.get_mpz_t(), p.get_mpz_t()) < 0) return q;
    }
}

// Candidate representatives covering every local square class at p.
std::vector<Int> local_class_reps(const Int& p) {
    if (p == 2)
        return {Int(1), Int(-1), Int(3), Int(-3), Int(2), Int(-2), Int(6), Int(-6)};
    Int n = smallest_nonresidue(p);
    return {Int(1), Int(-1), n, Int(-n), p, Int(-p), Int(n * p), Int(-n * p)};
}

bool same_local_class(const Int& a, const Int& b, const Place& v) {
    return is_local_square(Rat(a * b), v);
}

// A signed squarefree integer lying in the prescribed local square class at
// each listed prime, with the prescribed sign. Small candidates first; the
// general case appends one auxiliary prime found by CRT over the control
// modulus. Candidates carry at most one prime outside the listed set, which
// keeps Hilbert-reciprocity bookkeeping closed for the callers.
Int find_square_class(const std::map<Int, Int>& targets, int sign) {
    Int base = sign < 0 ? Int(-1) : Int(1);
    for (const auto& [p, rep] : targets) {
        if (valuation(Rat(rep), p) % 2 != 0) base *= p;
    }
    auto matches = [&](const Int& cand) {
        for (const auto& [p, rep] : targets) {
            if (!same_local_class(cand, rep, Place::prime(p))) return false;
        }
        return true;
    };
    if (matches(base)) return base;
    static const unsigned long aux[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                        37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                        79, 83, 89, 97};
    for (unsigned long q : aux) {
        if (targets.count(Int(q))) continue;
        Int cand = base * static_cast<long>(q);
        if (matches(cand)) return cand;
    }
    // One auxiliary prime l with prescribed residues mod 8 and mod each odd
    // control prime; Dirichlet guarantees the scan terminates.
    Int mod = 8, res = 1;
    if (auto it = targets.find(Int(2)); it != targets.end()) {
        Int ob = base;
        while (ob % 2 == 0) ob /= 2;
        Int ot = it->second;
        while (ot % 2 == 0) ot /= 2;
        res = ot * ob % 8;  // odd x is its own inverse mod 8
        if (res < 0) res += 8;
    }
    for (const auto& [p, rep] : targets) {
        if (p == 2) continue;
        Int ub = base, ut = rep;
        mpz_remove(ub.get_mpz_t(), ub.get_mpz_t(), p.get_mpz_t());
        mpz_remove(ut.get_mpz_t(), ut.get_mpz_t(), p.get_mpz_t());
        int chi = mpz_legendre(ut.get_mpz_t(), p.get_mpz_t()) *
                  mpz_legendre(ub.get_mpz_t(), p.get_mpz_t());
        Int rp = (chi > 0) ? Int(1) : smallest_nonresidue(p);
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t(),
                   p.get_mpz_t());
        if (g != 1) throw InternalError("CRT moduli not coprime");
        Int newmod = mod * p;
        Int combined = (res + mod * (((rp - res) * s) % p)) % newmod;
        if (combined < 0) combined += newmod;
        res = combined;
        mod = newmod;
    }
    for (Int l = res;; l += mod) {
        if (l <= 1) continue;
        if (targets.count(l)) continue;
        if (!is_prime(l)) continue;
        Int cand = base * l;
        if (!matches(cand))
            throw InternalError("auxiliary prime failed local targets");
        return cand;
    }
}

class Synthesizer {
public:
    Synthesizer(std::size_t m, long sigma, SquareClass d, std::map<Int, int> eps)
        : m_(m), sigma_(sigma), d_(std::move(d)), eps_(std::move(eps)) {}

    DiagonalForm run() {
        while (m_ > 3) peel_sign();
        if (m_ == 3) peel_ternary();
        if (m_ == 2) solve_binary();
        if (m_ == 1) entries_.push_back(d_);
        return DiagonalForm(std::move(entries_));
    }

private:
    std::set<Int> control_set() const {
        std::set<Int> ps;
        ps.insert(Int(2));
        for (const Int& p : odd_prime_support(d_.value())) ps.insert(p);
        for (const auto& [p, e] : eps_)
            if (e == -1) ps.insert(p);
        return ps;
    }

    // Split off <a>: d -> a*d, eps_p -> eps_p * (a, a*d)_p, sigma and m drop.
    void peel(const SquareClass& a) {
        entries_.push_back(a);
        SquareClass dnew = a * d_;
        std::set<Int> ps = control_set();
        for (const Int& p : odd_prime_support(a.value())) ps.insert(p);
        for (const Int& p : ps) {
            int h = hilbert_symbol(a, dnew, Place::prime(p));
            if (h == -1) eps_[p] = -eps_at(eps_, p);
        }
        d_ = dnew;
        sigma_ -= a.sign();
        --m_;
    }

    void peel_sign() {
        int s = sigma_ > 0 ? 1 : (sigma_ < 0 ? -1 : 1);
        peel(SquareClass::of(Int(s)));
    }

    // Choose the dim-3 entry so the remaining binary problem stays solvable:
    // after splitting off <a>, no control place may have -d' a local square
    // with Hasse invariant -1.
    void peel_ternary() {
        int s = sigma_ > 0 ? 1 : -1;
        std::set<Int> ps = control_set();
        auto admissible = [&](const Int& c) {
            SquareClass a = SquareClass::of(c);
            SquareClass dnew = a * d_;
            for (const Int& p : ps) {
                Place v = Place::prime(p);
                if (!is_local_square(dnew.negated(), v)) continue;
                int h = eps_at(eps_, p) * hilbert_symbol(a, dnew, v);
                if (h == -1) return false;
            }
            return true;
        };
        std::vector<Int> candidates = {Int(1), Int(2), Int(3),  Int(5),
                                       Int(6), Int(7), Int(10), Int(11)};
        for (const Int& p : ps) candidates.push_back(p);
        for (Int& c : candidates) c *= s;
        for (const Int& c : candidates) {
            if (admissible(c)) {
                peel(SquareClass::of(c));
                return;
            }
        }
        // Force a class differing from -d at every control place.
        std::map<Int, Int> targets;
        Int minus_d = -d_.value();
        for (const Int& p : ps) {
            for (const Int& rep : local_class_reps(p)) {
                if (!same_local_class(rep, minus_d, Place::prime(p))) {
                    targets[p] = rep;
                    break;
                }
            }
        }
        peel(SquareClass::of(find_square_class(targets, s)));
    }

    // dim 2: find b with (b, -d)_p = eps_p everywhere; the form is <b, b*d>.
    void solve_binary() {
        std::set<Int> ps = control_set();
        std::map<Int, Int> targets;
        for (const Int& p : ps) {
            Place v = Place::prime(p);
            int want = eps_at(eps_, p);
            bool ok = false;
            for (const Int& rep : local_class_reps(p)) {
                if (hilbert_symbol(Rat(rep), Rat(-d_.value()), v) == want) {
                    targets[p] = rep;
                    ok = true;
                    break;
                }
            }
            if (!ok) throw InternalError("binary class with impossible local data");
        }
        int s = (sigma_ == -2) ? -1 : 1;
        SquareClass b = SquareClass::of(find_square_class(targets, s));
        entries_.push_back(b);
        entries_.push_back(b * d_);
        m_ = 0;
    }

    std::size_t m_;
    long sigma_;
    SquareClass d_;
    std::map<Int, int> eps_;
    std::vector<SquareClass> entries_;
};

}  // namespace

int form_norm(const DiagonalForm& f) {
    if (f.empty()) return 0;
    long s = f.signature();
    int m = static_cast<int>(s < 0 ? -s : s);
    for (const Int& p : relevant_primes(f)) {
        m = std::max(m, local_anisotropic_dim(f, Place::prime(p)));
    }
    return m;
}

ClassInvariants kernel_invariants(const DiagonalForm& f) {
    ClassInvariants inv;
    inv.signature = f.signature();
    SquareClass d = f.determinant();
    std::map<Int, int> eps;
    std::size_t n = f.dim();
    int m = static_cast<int>(inv.signature < 0 ? -inv.signature : inv.signature);
    for (const Int& p : relevant_primes(f)) {
        Place v = Place::prime(p);
        eps[p] = hasse_invariant(f, v);
        m = std::max(m, local_anisotropic_dim(n, d, eps[p], v));
    }
    std::size_t splits = (n - static_cast<std::size_t>(m)) / 2;
    for (std::size_t k = 0; k < splits; ++k) {
        d = d.negated();
        for (auto& [p, e] : eps) {
            e *= hilbert_symbol(SquareClass::of(Int(-1)), d, Place::prime(p));
        }
    }
    inv.dim = static_cast<std::size_t>(m);
    inv.det = d;
    for (auto& [p, e] : eps)
        if (e == -1) inv.hasse[p] = -1;
    return inv;
}

DiagonalForm synthesize_form(const ClassInvariants& inv) {
    if (inv.dim == 0) return DiagonalForm();
    long asig = inv.signature < 0 ? -inv.signature : inv.signature;
    if ((inv.dim + static_cast<std::size_t>(asig)) % 2 ||
        static_cast<std::size_t>(asig) > inv.dim)
        throw InternalError("inconsistent signature in synthesis");
    DiagonalForm out =
        Synthesizer(inv.dim, inv.signature, inv.det, inv.hasse).run().sorted();
    ClassInvariants check = kernel_invariants(out);
    if (check.dim != inv.dim || check.signature != inv.signature ||
        !(check.det == inv.det) || check.hasse != inv.hasse)
        throw InternalError("synthesized form has wrong invariants");
    return out;
}

WittClass WittClass::of_form(const DiagonalForm& f) {
    return WittClass(synthesize_form(kernel_invariants(f)));
}

WittClass WittClass::symbol(const Rat& a) {
    if (a == 0) throw DomainError("symbol of zero");
    return of_form(DiagonalForm({SquareClass::of(a)}));
}

WittClass WittClass::operator+(const WittClass& o) const {
    return of_form(rep_.concat(o.rep_));
}

WittClass WittClass::operator-() const { return of_form(rep_.negated()); }

WittClass WittClass::scaled(const SquareClass& a) const {
    return of_form(rep_.scaled(a));
}

bool WittClass::in_I2() const {
    return rep_.dim() % 2 == 0 && rep_.signed_discriminant().is_one();
}

WittClass pfister2(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw DomainError("pfister2 of zero");
    return WittClass::of_form(
        DiagonalForm::of_rationals({Rat(1), Rat(-a), Rat(-b), Rat(a * b)}));
}

}  // namespace witt
