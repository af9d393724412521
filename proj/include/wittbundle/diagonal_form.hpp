#pragma once

#include <vector>

#include "wittbundle/square_class.hpp"

namespace witt {

// A diagonal quadratic form <a_1,...,a_n> over Q, entries held as square
// classes. The empty form is the zero form.
class DiagonalForm {
public:
    DiagonalForm() = default;
    explicit DiagonalForm(std::vector<SquareClass> entries)
        : entries_(std::move(entries)) {}

    // Zero entries are rejected (SquareClass construction throws).
    static DiagonalForm of_rationals(const std::vector<Rat>& coeffs);

    const std::vector<SquareClass>& entries() const { return entries_; }
    std::size_t dim() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // (#positive entries) - (#negative entries).
    long signature() const;

    // d_pm = (-1)^{n(n-1)/2} * prod(entries) as a square class; 1 on the
    // empty form.
    SquareClass signed_discriminant() const;

    // prod(entries) as a square class; 1 on the empty form.
    SquareClass determinant() const;

    DiagonalForm concat(const DiagonalForm& o) const;
    DiagonalForm negated() const;
    DiagonalForm scaled(const SquareClass& a) const;

    // Positives before negatives, then by |value| ascending.
    DiagonalForm sorted() const;

    bool operator==(const DiagonalForm& o) const { return entries_ == o.entries_; }

    std::string str() const;  // "1,7,-2,-14"; "" for the zero form

private:
    std::vector<SquareClass> entries_;
};

DiagonalForm parse_form(const std::string& s);

}  // namespace witt
