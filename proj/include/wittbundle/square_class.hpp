#pragma once

#include <span>
#include <vector>

#include "wittbundle/rational.hpp"

namespace witt {

// An element of Q*/Q*^2, held as its unique signed squarefree integer
// representative. Two rationals land in the same class iff their quotient
// is a rational square.
class SquareClass {
public:
    SquareClass() : value_(1) {}

    static SquareClass of(const Rat& r);
    static SquareClass of(const Int& n);

    // Class of the product r_1 * ... * r_k. Shared factors are cancelled by
    // coprime refinement before anything gets factored, so x^2-shaped
    // structure across the factors costs nothing.
    static SquareClass of_product(std::span<const Rat> rs);

    const Int& value() const { return value_; }
    int sign() const { return sgn(value_); }
    bool is_one() const { return value_ == 1; }

    SquareClass operator*(const SquareClass& o) const;
    SquareClass negated() const;
    SquareClass inverse() const { return *this; }  // every class is 2-torsion

    bool operator==(const SquareClass& o) const { return value_ == o.value_; }
    bool operator!=(const SquareClass& o) const { return value_ != o.value_; }
    bool operator<(const SquareClass& o) const { return value_ < o.value_; }

    std::string str() const { return value_.get_str(); }

private:
    explicit SquareClass(Int v) : value_(std::move(v)) {}
    Int value_;  // signed, squarefree, nonzero
};

}  // namespace witt
