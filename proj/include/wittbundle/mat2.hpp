#pragma once

#include "wittbundle/rational.hpp"

namespace witt {

// An exact 2x2 rational matrix of determinant 1.
class Mat2 {
public:
    Mat2() : a11_(1), a12_(0), a21_(0), a22_(1) {}
    Mat2(Rat a11, Rat a12, Rat a21, Rat a22);

    static Mat2 identity() { return Mat2(); }
    static Mat2 diagonal(const Rat& t);  // diag(t, 1/t), t != 0

    const Rat& a11() const { return a11_; }
    const Rat& a12() const { return a12_; }
    const Rat& a21() const { return a21_; }
    const Rat& a22() const { return a22_; }

    Rat trace() const { return a11_ + a22_; }
    bool is_identity() const;
    bool is_upper_triangular() const { return a21_ == 0; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;
    Mat2 power(long k) const;

    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    bool commutes_with(const Mat2& o) const { return *this * o == o * *this; }

    std::string str() const;

private:
    Rat a11_, a12_, a21_, a22_;
};

// a x a^{-1}
Mat2 conj(const Mat2& a, const Mat2& x);

// x y x^{-1} y^{-1}
Mat2 commutator(const Mat2& x, const Mat2& y);

}  // namespace witt
