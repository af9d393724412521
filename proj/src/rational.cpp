#include "wittbundle/rational.hpp"

#include <cctype>

namespace witt {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) throw ParseError("blank rational literal");
    auto ok_digits = [](const std::string& u) {
        if (u.empty()) return false;
        std::size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    Rat r;
    if (slash == std::string::npos) {
        if (!ok_digits(t)) throw ParseError("bad rational literal: '" + s + "'");
        r = Rat(Int(t));
    } else {
        std::string num = t.substr(0, slash);
        std::string den = t.substr(slash + 1);
        if (!ok_digits(num) || !ok_digits(den))
            throw ParseError("bad rational literal: '" + s + "'");
        Int d(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        r = Rat(Int(num), d);
    }
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_rational_square(const Rat& r) {
    if (r < 0) return false;
    if (r == 0) return true;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

Rat rational_sqrt(const Rat& r) {
    if (!is_rational_square(r))
        throw DomainError("not a rational square: " + rat_to_string(r));
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    Rat out(n, d);
    out.canonicalize();
    return out;
}

namespace {

long int_valuation(const Int& n, const Int& p) {
    long v = 0;
    Int m = abs(n), q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

}  // namespace

long valuation(const Rat& r, const Int& p) {
    if (r == 0) throw DomainError("valuation of zero");
    return int_valuation(r.get_num(), p) - int_valuation(r.get_den(), p);
}

Rat unit_part(const Rat& r, const Int& p) {
    long v = valuation(r, p);
    Rat pw(1);
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    Rat out = (v >= 0) ? Rat(r / Rat(pe)) : Rat(r * Rat(pe));
    out.canonicalize();
    return out;
}

}  // namespace witt
