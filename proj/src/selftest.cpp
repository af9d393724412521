#include "wittbundle/selftest.hpp"

#include <functional>

#include "wittbundle/factor.hpp"
#include "wittbundle/normal_form.hpp"

namespace witt {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::int_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Int Rng::nonzero_int(long height) {
    long v = int_in(-height, height);
    if (v == 0) v = 1;
    return Int(v);
}

Rat Rng::nonzero_rat(long height) {
    Rat r(nonzero_int(height), Int(int_in(1, height)));
    r.canonicalize();
    return r;
}

Mat2 Rng::mat(long height) {
    Rat a(nonzero_int(height));
    Rat b(int_in(-height, height));
    Rat c(int_in(-height, height));
    Rat d = (1 + b * c) / a;
    return Mat2(a, b, c, d);
}

std::pair<Mat2, Mat2> Rng::commuting_pair(long height) {
    if (next() % 2 == 0) {
        Mat2 m = mat(height);
        return {m.power(int_in(1, 3)), m.power(int_in(1, 3))};
    }
    Mat2 a = mat(height);
    Rat t = nonzero_rat(height);
    Rat s = nonzero_rat(height);
    return {conj(a, Mat2::diagonal(t)), conj(a, Mat2::diagonal(s))};
}

WittClass Rng::i2_class(long height) {
    WittClass q;
    long k = int_in(1, 3);
    for (long i = 0; i < k; ++i) {
        q = q + pfister2(nonzero_rat(height), nonzero_rat(height));
    }
    return q;
}

BoundedSurfaceRep Rng::bounded_rep(std::size_t genus, long height) {
    std::vector<HandlePair> pairs;
    for (std::size_t i = 0; i < genus; ++i) pairs.push_back({mat(height), mat(height)});
    return BoundedSurfaceRep(std::move(pairs));
}

ClosedSurfaceRep Rng::closed_rep(long height) {
    // Glue a random bounded rep against a centralizer twist of itself; the
    // boundaries then agree exactly.
    BoundedSurfaceRep b1 = bounded_rep(next() % 2 ? 1 : 2, height);
    long k = int_in(0, 2);
    BoundedSurfaceRep b2 = twist_bounded(b1, b1.boundary().power(k));
    return glue_closed(b1, b2);
}

namespace {

using Check = std::function<bool(Rng&)>;

SuiteResult run_suite(const std::string& name, unsigned long iters,
                      std::uint64_t seed, const Check& check) {
    Rng rng(seed);
    unsigned long passes = 0;
    for (unsigned long i = 0; i < iters; ++i) {
        if (check(rng)) ++passes;
    }
    return {name, iters, passes};
}

bool check_cocycle_law(Rng& rng, long height) {
    Mat2 x = rng.mat(height), y = rng.mat(height), z = rng.mat(height);
    WittClass lhs = witt_cocycle(y, z) - witt_cocycle(x * y, z) +
                    witt_cocycle(x, y * z) - witt_cocycle(x, y);
    return lhs.is_zero();
}

bool check_equicommutative(Rng& rng, long height) {
    auto [a, b] = rng.commuting_pair(height);
    return witt_cocycle(a, b) == witt_cocycle(b, a);
}

bool check_moore_comparison(Rng& rng, long height) {
    Mat2 g = rng.mat(height), h = rng.mat(height);
    return moore_witt_cocycle(g, h) == witt_cocycle(g, h) + coboundary_n(g, h);
}

bool check_lower_cell_formula(Rng& rng, long height) {
    // On (g2, g2) pairs the cocycle is [w'] when w' != 0 and 0 otherwise.
    Mat2 g = rng.mat(height), h = rng.mat(height);
    if (g.a21() == 0 || h.a21() == 0) return true;
    NormalForm a = decompose(g), b = decompose(h);
    Rat w = -(a.v + b.u);
    WittClass expect = (w == 0) ? WittClass::zero() : WittClass::symbol(w);
    return witt_cocycle(g, h) == expect;
}

bool check_reciprocity(Rng& rng, long height) {
    Rat a = rng.nonzero_rat(height), b = rng.nonzero_rat(height);
    int prod = hilbert_symbol(a, b, Place::real());
    prod *= hilbert_symbol(a, b, Place::prime(Int(2)));
    SquareClass sa = SquareClass::of(a), sb = SquareClass::of(b);
    for (const Int& p : odd_prime_support((sa * sb).value()))
        prod *= hilbert_symbol(a, b, Place::prime(p));
    // Primes dividing both squarefree parts drop out of the product above;
    // include them separately.
    Int g = gcd(sa.value(), sb.value());
    for (const Int& p : odd_prime_support(g))
        prod *= hilbert_symbol(a, b, Place::prime(p));
    return prod == 1;
}

bool check_normal_form(Rng& rng, long height) {
    Mat2 g = rng.mat(height);
    return decode(decompose(g)) == g;
}

bool check_gluing(Rng& rng, long height) {
    BoundedSurfaceRep b1 = rng.bounded_rep(1 + rng.next() % 2, height);
    BoundedSurfaceRep b2 = twist_bounded(b1, b1.boundary().power(rng.int_in(0, 2)));
    WittClass glued = evaluate_closed(glue_closed(b1, b2));
    return glued == relative_class(b1) - relative_class(b2);
}

bool check_twist_bounded(Rng& rng, long height) {
    BoundedSurfaceRep b = rng.bounded_rep(1, height);
    Mat2 A = rng.mat(height);
    const Mat2& W = b.boundary();
    WittClass shifted = relative_class(b) + witt_cocycle(A, W) -
                        witt_cocycle(conj(A, W), A);
    return relative_class(twist_bounded(b, A)) == shifted;
}

bool check_vee(Rng& rng, long height) {
    BoundedSurfaceRep b1 = rng.bounded_rep(1, height);
    BoundedSurfaceRep b2 = rng.bounded_rep(1, height);
    WittClass expect = relative_class(b1) + relative_class(b2) +
                       witt_cocycle(b1.boundary(), b2.boundary());
    return relative_class(vee(b1, b2)) == expect;
}

bool check_genus1_formula(Rng& rng, long height) {
    // The one-handle relative class against the raw extension product.
    Mat2 x = rng.mat(height), y = rng.mat(height);
    ExtElem raw = ext_commutator(ExtElem::lift(x), ExtElem::lift(y));
    ExtElem fast = lifted_commutator(x, y);
    return raw.g == fast.g && raw.u == fast.u;
}

bool check_twist_closed(Rng& rng, long height) {
    ClosedSurfaceRep r = rng.closed_rep(height);
    std::size_t handle = 1 + rng.next() % r.genus();
    Mat2 V = r.pairs()[handle - 1].B.power(rng.int_in(1, 2));
    WittClass before = evaluate_closed(r);
    return evaluate_closed(twist_closed(r, handle, V)) == before;
}

bool check_conjugation(Rng& rng, long height) {
    ClosedSurfaceRep r = rng.closed_rep(height);
    Mat2 A = rng.mat(height);
    return evaluate_closed(conjugate_rep(r, A)) == evaluate_closed(r);
}

bool check_symbol_relations(Rng& rng, long height) {
    Rat s = rng.nonzero_rat(height), t = rng.nonzero_rat(height);
    Rat r = rng.nonzero_rat(height);
    if (pfister2(s, t) != pfister2(1 / t, s)) return false;
    if (pfister2(s, t) != pfister2(s, -s * t)) return false;
    if (s != 1 && pfister2(s, t) != pfister2(s, (1 - s) * t)) return false;
    if (pfister2(s * t, r) + pfister2(s, t) != pfister2(s, t * r) + pfister2(t, r))
        return false;
    // Chain relation: <<a>> + <<b>> = <<a+b>> + <<(a+b)ab>>.
    Rat a = rng.nonzero_rat(height), b = rng.nonzero_rat(height);
    if (a + b != 0) {
        auto pf1 = [](const Rat& x) {
            return WittClass::of_form(DiagonalForm::of_rationals({Rat(1), -x}));
        };
        if (pf1(a) + pf1(b) != pf1(a + b) + pf1((a + b) * a * b)) return false;
    }
    long sq = rng.int_in(1, 9);
    return pfister2(s * sq * sq, t) == pfister2(s, t);
}

}  // namespace

std::vector<SuiteResult> run_selftest(unsigned long iters, std::uint64_t seed,
                                      long height) {
    if (iters < 1) throw DomainError("selftest needs iters >= 1");
    if (height < 2) throw DomainError("selftest needs height >= 2");
    std::vector<SuiteResult> out;
    auto add = [&](const std::string& name, unsigned long n,
                   const std::function<bool(Rng&)>& check) {
        out.push_back(run_suite(name, n, seed ^ std::hash<std::string>{}(name), check));
    };
    using namespace std::placeholders;
    add("cocycle_law", iters, [&](Rng& r) { return check_cocycle_law(r, height); });
    add("equicommutativity", iters,
        [&](Rng& r) { return check_equicommutative(r, height); });
    add("moore_comparison", iters,
        [&](Rng& r) { return check_moore_comparison(r, height); });
    add("lower_cell_formula", iters,
        [&](Rng& r) { return check_lower_cell_formula(r, height); });
    add("hilbert_reciprocity", iters,
        [&](Rng& r) { return check_reciprocity(r, height); });
    add("normal_form_roundtrip", iters,
        [&](Rng& r) { return check_normal_form(r, height); });
    add("gluing_difference", iters, [&](Rng& r) { return check_gluing(r, height); });
    add("twist_bounded_shift", iters,
        [&](Rng& r) { return check_twist_bounded(r, height); });
    add("vee_correction", iters, [&](Rng& r) { return check_vee(r, height); });
    add("commutator_lift_paths", iters,
        [&](Rng& r) { return check_genus1_formula(r, height); });
    add("twist_closed_invariance", iters,
        [&](Rng& r) { return check_twist_closed(r, height); });
    add("conjugation_invariance", iters,
        [&](Rng& r) { return check_conjugation(r, height); });
    add("symbol_relation_images", iters,
        [&](Rng& r) { return check_symbol_relations(r, height); });
    return out;
}

}  // namespace witt
