#include "wittbundle/factor.hpp"

#include <algorithm>
#include <map>

namespace witt {

namespace {

constexpr unsigned long kSieveLimit = 100000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> comp(kSieveLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kSieveLimit; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kSieveLimit; j += i) comp[j] = true;
        }
        return out;
    }();
    return primes;
}

// Primes > kSieveLimit discovered during this thread's lifetime. The matrix
// pipelines reuse the same large primes across many cocycle values, so trying
// the pool before rho resolves most big cofactors with one division.
thread_local std::vector<Int> g_pool;

void pool_insert(const Int& p) {
    if (mpz_cmp_ui(p.get_mpz_t(), kSieveLimit) <= 0) return;
    auto it = std::lower_bound(g_pool.begin(), g_pool.end(), p);
    if (it != g_pool.end() && *it == p) return;
    if (g_pool.size() >= 2048) g_pool.clear();
    g_pool.insert(it, p);
}

// Brent's cycle variant of Pollard rho with batched gcds. Returns a proper
// factor or 0 on failure within the budget.
Int pollard_brent(const Int& n, unsigned long c, unsigned long budget) {
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1, used = 0;
    const unsigned long batch = 128;
    while (g == 1 && used < budget) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long steps = std::min(batch, r - k);
            for (unsigned long i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (d != 0) q = (q * d) % n;
            }
            used += steps;
            g = gcd(q, n);
            k += steps;
            if (used >= budget) break;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        unsigned long extra = 0;
        while (g == 1 && extra < 4 * batch) {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (d == 0) break;
            g = gcd(d, n);
            ++extra;
        }
    }
    if (g == 1 || g == n) return 0;
    return g;
}

void factor_into(const Int& n, std::map<Int, long>& out, long mult);

void split_composite(const Int& n, std::map<Int, long>& out, long mult) {
    for (unsigned long c = 1; c <= 20; ++c) {
        Int d = pollard_brent(n, c, 1UL << 23);
        if (d != 0 && d != 1 && d != n) {
            factor_into(d, out, mult);
            factor_into(n / d, out, mult);
            return;
        }
    }
    throw InternalError("factorization budget exceeded on " + n.get_str());
}

void factor_into(const Int& n, std::map<Int, long>& out, long mult) {
    Int m = abs(n);
    if (m <= 1) return;
    if (is_prime(m)) {
        pool_insert(m);
        out[m] += mult;
        return;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
        factor_into(r, out, 2 * mult);
        return;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = 3; k <= mpz_sizeinbase(m.get_mpz_t(), 2); ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                factor_into(r, out, static_cast<long>(k) * mult);
                return;
            }
        }
    }
    split_composite(m, out, mult);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::vector<PrimePower> factorize(const Int& n) {
    if (n == 0) throw DomainError("factorize(0)");
    Int m = abs(n);
    std::map<Int, long> found;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t());
        if (e) found[Int(p)] += static_cast<long>(e);
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    }
    if (m > 1 && mpz_sizeinbase(m.get_mpz_t(), 2) <= 33) {
        // Below the square of the sieve bound, the leftover is prime.
        found[m] += 1;
        m = 1;
    }
    if (m > 1 && mpz_sizeinbase(m.get_mpz_t(), 2) > 64) {
        for (const Int& p : g_pool) {
            if (m == 1) break;
            unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            if (e) found[p] += static_cast<long>(e);
        }
    }
    if (m > 1) factor_into(m, found, 1);
    std::vector<PrimePower> out;
    out.reserve(found.size());
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) throw DomainError("squarefree_part(0)");
    Int out = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) out *= p;
    return sgn(n) < 0 ? Int(-out) : out;
}

std::vector<Int> odd_prime_support(const Int& n) {
    std::vector<Int> out;
    for (const auto& [p, e] : factorize(n))
        if (p != 2) out.push_back(p);
    return out;
}

void CoprimeRefiner::add(const Int& value, long exp) {
    if (value == 0) throw DomainError("CoprimeRefiner: zero value");
    std::vector<std::pair<Int, long>> work;
    work.emplace_back(abs(value), exp);
    while (!work.empty()) {
        auto [n, e] = work.back();
        work.pop_back();
        if (n == 1) continue;
        bool split = false;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            Int g = gcd(n, atoms_[i].first);
            if (g == 1) continue;
            auto [m, f] = atoms_[i];
            atoms_.erase(atoms_.begin() + static_cast<long>(i));
            work.emplace_back(g, e + f);
            if (m != g) work.emplace_back(m / g, f);
            if (n != g) work.emplace_back(n / g, e);
            split = true;
            break;
        }
        if (!split) atoms_.emplace_back(n, e);
    }
}

}  // namespace witt
