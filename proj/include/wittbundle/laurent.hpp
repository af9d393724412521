#pragma once

#include "wittbundle/witt_class.hpp"

namespace witt {

// The monomial fragment of quadratic forms over Q((x)): diagonal entries
// c * x^k with k normalized to {0,1} (x^2 is a square).
class LaurentForm {
public:
    struct Entry {
        SquareClass coeff;
        int exponent;  // 0 or 1
    };

    LaurentForm() = default;
    explicit LaurentForm(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    // Entries as (coefficient, exponent) pairs; exponents reduced mod 2.
    static LaurentForm of(const std::vector<std::pair<Rat, long>>& entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t dim() const { return entries_.size(); }

    // Residue forms: q = q0 + x*q1 by exponent.
    DiagonalForm residue0() const;
    DiagonalForm residue1() const;

    std::string str() const;  // "1:0,7:0,1:1,-7:1"

private:
    std::vector<Entry> entries_;
};

// Springer decomposition: the anisotropic dimension over Q((x)) is the sum
// of the anisotropic dimensions of the two residue forms over Q.
int laurent_anisotropic_dim(const LaurentForm& f);

LaurentForm parse_laurent(const std::string& s);

}  // namespace witt
