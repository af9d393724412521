#pragma once

#include "wittbundle/rational.hpp"

namespace witt {

// A completion of Q: the real place, or the p-adic place at a prime p.
class Place {
public:
    static Place real() { return Place(); }
    static Place prime(const Int& p);

    bool is_real() const { return real_; }
    const Int& p() const {
        if (real_) throw DomainError("real place has no prime");
        return p_;
    }

    bool operator==(const Place& o) const { return real_ == o.real_ && p_ == o.p_; }

    std::string str() const { return real_ ? "inf" : p_.get_str(); }

private:
    Place() : real_(true), p_(0) {}
    explicit Place(Int p) : real_(false), p_(std::move(p)) {}
    bool real_;
    Int p_;
};

}  // namespace witt
