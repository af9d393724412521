#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "wittbundle/factor.hpp"

namespace oracle {

using witt::Int;
using witt::Rat;

namespace {

long val_at(const Int& n, const Int& p) {
    Int m = abs(n);
    return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

// flags: bit0 = sum achievable, bit1 = achievable with a unit coordinate.
std::vector<unsigned char> square_table(unsigned long mod, unsigned long p) {
    std::vector<unsigned char> sq(mod, 0);
    for (unsigned long x = 0; x < mod; ++x) {
        unsigned long s = static_cast<unsigned long>(
            (static_cast<unsigned long long>(x) * x) % mod);
        sq[s] |= (x % p != 0) ? 3 : 1;
    }
    return sq;
}

}  // namespace

bool locally_isotropic(const std::vector<Int>& entries, const Int& p) {
    if (entries.size() < 2) return false;
    long maxv = 0;
    for (const Int& a : entries) maxv = std::max(maxv, val_at(a, p));
    unsigned long K = (p == 2) ? static_cast<unsigned long>(2 * maxv + 4)
                               : static_cast<unsigned long>(2 * maxv + 1);
    Int modz;
    mpz_pow_ui(modz.get_mpz_t(), p.get_mpz_t(), K);
    if (!modz.fits_ulong_p()) throw witt::Error("local search modulus too large");
    unsigned long mod = modz.get_ui();
    unsigned long pl = p.get_ui();
    std::vector<unsigned char> sq = square_table(mod, pl);
    // achieved[v]: bit0 any, bit1 with >=1 unit coordinate so far.
    std::vector<unsigned char> achieved(mod, 0), next(mod, 0);
    achieved[0] = 1;
    for (const Int& a : entries) {
        Int am = a % static_cast<long>(mod);
        if (am < 0) am += static_cast<long>(mod);
        unsigned long ar = am.get_ui();
        std::fill(next.begin(), next.end(), 0);
        for (unsigned long s = 0; s < mod; ++s) {
            unsigned char sf = sq[s];
            if (!sf) continue;
            unsigned long add = static_cast<unsigned long>(
                (static_cast<unsigned long long>(ar) * s) % mod);
            for (unsigned long v = 0; v < mod; ++v) {
                unsigned char av = achieved[v];
                if (!(av & 1)) continue;
                unsigned long w = v + add;
                if (w >= mod) w -= mod;
                // A unit coordinate either appeared earlier or appears here.
                unsigned char nb = ((av & 2) || (sf & 2)) ? 3 : 1;
                next[w] |= nb;
            }
        }
        achieved.swap(next);
    }
    return (achieved[0] & 2) != 0;
}

bool really_isotropic(const std::vector<Int>& entries) {
    bool pos = false, neg = false;
    for (const Int& a : entries) {
        if (a > 0) pos = true;
        if (a < 0) neg = true;
    }
    return pos && neg;
}

std::optional<std::vector<long>> global_zero(const std::vector<Int>& entries,
                                             long height) {
    std::size_t n = entries.size();
    if (n < 2) return std::nullopt;
    std::vector<long long> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries[i].fits_slong_p()) throw witt::Error("oracle entry too large");
        a[i] = entries[i].get_si();
    }
    std::size_t half = (n <= 4) ? n / 2 : 3;
    // Map: value of the first half -> one witness tuple.
    std::unordered_map<long long, std::vector<long>> first;
    std::vector<long> x(half, 0);
    auto rec1 = [&](auto&& self, std::size_t i, long long sum) -> void {
        if (i == half) {
            first.emplace(sum, x);
            return;
        }
        for (long v = 0; v <= height; ++v) {
            x[i] = v;
            self(self, i + 1, sum + a[i] * v * v);
        }
    };
    rec1(rec1, 0, 0);
    std::vector<long> y(n - half, 0);
    std::optional<std::vector<long>> out;
    auto rec2 = [&](auto&& self, std::size_t i, long long sum) -> bool {
        if (i == n - half) {
            auto it = first.find(-sum);
            if (it == first.end()) return false;
            bool nontrivial = sum != 0;
            for (long v : it->second) nontrivial = nontrivial || v != 0;
            for (long v : y) nontrivial = nontrivial || v != 0;
            if (!nontrivial) return false;
            std::vector<long> sol = it->second;
            sol.insert(sol.end(), y.begin(), y.end());
            out = sol;
            return true;
        }
        for (long v = 0; v <= height; ++v) {
            y[i] = v;
            if (self(self, i + 1, sum + a[half + i] * v * v)) return true;
        }
        return false;
    };
    rec2(rec2, 0, 0);
    return out;
}

int hilbert_symbol(const Rat& a, const Rat& b, bool real_place, const Int& p) {
    if (real_place) return (a < 0 && b < 0) ? -1 : 1;
    // z^2 = a x^2 + b y^2 solvable iff <a, b, -1> is isotropic; clear
    // denominators by squares first.
    auto clear = [](const Rat& r) { return Int(r.get_num() * r.get_den()); };
    std::vector<Int> f = {clear(a), clear(b), Int(-1)};
    return locally_isotropic(f, p) ? 1 : -1;
}

namespace {

// Exact hyperbolic-plane split along a found isotropic vector; returns the
// diagonalized orthogonal complement, entries reduced to squarefree parts.
std::vector<Int> split_along(const std::vector<Int>& entries,
                             const std::vector<long>& zero) {
    std::size_t n = entries.size();
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(zero[i]);
    // u: a basis vector with B(v,u) != 0.
    std::size_t u_idx = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != 0) {
            u_idx = i;
            break;
        }
    }
    if (u_idx == n) throw witt::InternalError("zero vector passed to split");
    // Rows of the constraint system: B(v,.) and B(u,.).
    std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) rows[0][i] = Rat(entries[i]) * v[i];
    rows[1][u_idx] = Rat(entries[u_idx]);
    // Kernel basis by Gaussian elimination.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < 2; ++c) {
        std::size_t pr = r;
        while (pr < 2 && rows[pr][c] == 0) ++pr;
        if (pr == 2) continue;
        std::swap(rows[pr], rows[r]);
        Rat inv = Rat(1) / rows[r][c];
        for (auto& e : rows[r]) e *= inv;
        for (std::size_t rr = 0; rr < 2; ++rr) {
            if (rr == r || rows[rr][c] == 0) continue;
            Rat f = rows[rr][c];
            for (std::size_t cc = 0; cc < n; ++cc) rows[rr][cc] -= f * rows[r][cc];
        }
        pivots.push_back(c);
        ++r;
    }
    if (r != 2) throw witt::InternalError("degenerate split system");
    std::vector<std::vector<Rat>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::vector<Rat> w(n, Rat(0));
        w[c] = 1;
        for (std::size_t k = 0; k < 2; ++k) w[pivots[k]] = -rows[k][c];
        basis.push_back(std::move(w));
    }
    std::size_t m = basis.size();
    // Gram matrix of the complement.
    std::vector<std::vector<Rat>> G(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                G[i][j] += Rat(entries[k]) * basis[i][k] * basis[j][k];
    // Symmetric diagonalization.
    for (std::size_t i = 0; i < m; ++i) {
        if (G[i][i] == 0) {
            bool fixed = false;
            for (std::size_t j = i + 1; j < m && !fixed; ++j) {
                if (G[j][j] != 0) {
                    std::swap(G[i], G[j]);
                    for (auto& row : G) std::swap(row[i], row[j]);
                    fixed = true;
                } else if (G[i][j] != 0) {
                    // e_i += e_j turns the diagonal entry into 2*G[i][j].
                    for (std::size_t k = 0; k < m; ++k) G[i][k] += G[j][k];
                    for (std::size_t k = 0; k < m; ++k) G[k][i] += G[k][j];
                    fixed = true;
                }
            }
            if (!fixed) throw witt::InternalError("degenerate Gram block");
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            if (G[i][j] == 0) continue;
            Rat f = G[i][j] / G[i][i];
            for (std::size_t k = 0; k < m; ++k) G[j][k] -= f * G[i][k];
            for (std::size_t k = 0; k < m; ++k) G[k][j] -= f * G[k][i];
        }
    }
    std::vector<Int> out;
    for (std::size_t i = 0; i < m; ++i) {
        if (G[i][i] == 0) throw witt::InternalError("degenerate complement");
        out.push_back(witt::squarefree_part(Int(G[i][i].get_num() * G[i][i].get_den())));
    }
    return out;
}

}  // namespace

int norm(const std::vector<Int>& entries) {
    std::size_t n = entries.size();
    if (n == 0) return 0;
    if (n == 1) return 1;
    std::optional<std::vector<long>> zero;
    std::vector<long> heights =
        (n <= 4) ? std::vector<long>{50, 200, 800} : std::vector<long>{50, 100, 150};
    for (long height : heights) {
        zero = global_zero(entries, height);
        if (zero) break;
    }
    if (!zero) {
        // Certify anisotropy at some place.
        if (!really_isotropic(entries)) return static_cast<int>(n);
        if (n == 2) {
            Int prod = -entries[0] * entries[1];
            if (prod > 0 && mpz_perfect_square_p(prod.get_mpz_t()))
                throw witt::Error("oracle inconclusive: binary zero missed");
            return 2;
        }
        std::vector<Int> ps = {Int(2)};
        for (const Int& a : entries)
            for (const Int& p : witt::odd_prime_support(a)) ps.push_back(p);
        for (const Int& p : ps) {
            if (!locally_isotropic(entries, p)) return static_cast<int>(n);
        }
        throw witt::Error("oracle inconclusive: no certificate found");
    }
    return norm(split_along(entries, *zero));
}

}  // namespace oracle
