#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace witt {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input strings / files.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Violated preconditions (zero where nonzero required, composite place, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Bookkeeping that must not fail did fail; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& n) { return sgn(n); }

// Parses "p/q" or "p" with optional sign; q > 0 after canonicalization.
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& r);

// r = s^2 for some rational s. r may be zero.
bool is_rational_square(const Rat& r);

// The positive rational square root; throws DomainError if r is not a
// square of a rational.
Rat rational_sqrt(const Rat& r);

// p-adic valuation of a nonzero rational at an odd-or-even prime p.
long valuation(const Rat& r, const Int& p);

// r / p^valuation as a rational unit at p.
Rat unit_part(const Rat& r, const Int& p);

}  // namespace witt
