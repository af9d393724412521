#include "wittbundle/mat2.hpp"

namespace witt {

Mat2::Mat2(Rat a11, Rat a12, Rat a21, Rat a22)
    : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)), a22_(std::move(a22)) {
    if (a11_ * a22_ - a12_ * a21_ != 1)
        throw DomainError("matrix determinant is not 1");
}

Mat2 Mat2::diagonal(const Rat& t) {
    if (t == 0) throw DomainError("diagonal(0)");
    return Mat2(t, Rat(0), Rat(0), Rat(1) / t);
}

bool Mat2::is_identity() const {
    return a11_ == 1 && a12_ == 0 && a21_ == 0 && a22_ == 1;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.a11_ = a11_ * o.a11_ + a12_ * o.a21_;
    r.a12_ = a11_ * o.a12_ + a12_ * o.a22_;
    r.a21_ = a21_ * o.a11_ + a22_ * o.a21_;
    r.a22_ = a21_ * o.a12_ + a22_ * o.a22_;
    return r;
}

Mat2 Mat2::inverse() const {
    Mat2 r;
    r.a11_ = a22_;
    r.a12_ = -a12_;
    r.a21_ = -a21_;
    r.a22_ = a11_;
    return r;
}

Mat2 Mat2::power(long k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Mat2 out;
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

bool Mat2::operator==(const Mat2& o) const {
    return a11_ == o.a11_ && a12_ == o.a12_ && a21_ == o.a21_ && a22_ == o.a22_;
}

std::string Mat2::str() const {
    return "[[" + rat_to_string(a11_) + "," + rat_to_string(a12_) + "],[" +
           rat_to_string(a21_) + "," + rat_to_string(a22_) + "]]";
}

Mat2 conj(const Mat2& a, const Mat2& x) { return a * x * a.inverse(); }

Mat2 commutator(const Mat2& x, const Mat2& y) {
    return x * y * x.inverse() * y.inverse();
}

}  // namespace witt
