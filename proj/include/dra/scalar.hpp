#pragma once

#include "dra/rational.hpp"

#include <string>

namespace dra {

/// Element of the quadratic field Q(c) with c^2 = -1/2.
///
/// The generator c stands in for i/sqrt(2); squaring always rewrites back
/// into the field, so every computation stays exact.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(long n) : re_(n) {}
    Scalar(int n) : re_(n) {}
    Scalar(Rational re, Rational cc) : re_(std::move(re)), cc_(std::move(cc)) {}

    /// The generator c itself (squares to -1/2).
    static Scalar c() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& cc() const { return cc_; }

    bool is_zero() const { return re_.is_zero() && cc_.is_zero(); }
    bool is_rational() const { return cc_.is_zero(); }

    Scalar operator-() const { return Scalar(-re_, -cc_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        cc_ += o.cc_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        cc_ -= o.cc_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // (a + b c)(a' + b' c) = aa' - bb'/2 + (ab' + a'b) c
        Rational re = re_ * o.re_ - cc_ * o.cc_ / Rational(2);
        Rational cc = re_ * o.cc_ + cc_ * o.re_;
        re_ = std::move(re);
        cc_ = std::move(cc);
        return *this;
    }

    /// Field inverse; (a + bc)(a - bc) = a^2 + b^2/2 > 0 for nonzero input.
    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        Rational norm = re_ * re_ + cc_ * cc_ / Rational(2);
        return Scalar(re_ / norm, -cc_ / norm);
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.cc_ == b.cc_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.cc_ < b.cc_;
    }

    /// "a + b*c" with zero parts dropped.
    std::string str() const;

private:
    Rational re_{};
    Rational cc_{};
};

inline Scalar operator*(const Rational& a, const Scalar& b) { return Scalar(a) * b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(Rational(a)) * b; }

} // namespace dra
