#pragma once

#include "dra/errors.hpp"
#include "dra/scalar.hpp"

#include <string>
#include <vector>

namespace dra {

/// Polynomial in the central indeterminate H, coefficients in Q(c).
/// Coefficients ascending by degree, no trailing zeros (zero poly = empty).
class HPoly {
public:
    HPoly() = default;
    HPoly(Scalar constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    HPoly(long constant) : HPoly(Scalar(constant)) {}
    explicit HPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial H.
    static HPoly var() { return HPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    /// H + k.
    static HPoly var_plus(const Scalar& k) {
        return HPoly(std::vector<Scalar>{k, Scalar(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !is_zero() && leading() == Scalar(1); }

    Scalar coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
        return coeffs_[static_cast<size_t>(k)];
    }

    HPoly operator-() const;
    friend HPoly operator+(const HPoly& a, const HPoly& b);
    friend HPoly operator-(const HPoly& a, const HPoly& b);
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly operator*(const Scalar& s) const;

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    Scalar eval(const Scalar& t) const;

    /// Substitution H -> H + k.
    HPoly shifted(long k) const;

    /// Quotient and remainder by a nonzero divisor (field coefficients).
    std::pair<HPoly, HPoly> divrem(const HPoly& d) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static HPoly gcd(HPoly a, HPoly b);

    HPoly monic() const;

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

/// Rational function in H: numerator / monic denominator, gcd-reduced.
/// Houses the projector coefficients phi_n, kappa_n and every H-dependent
/// coefficient of the localized picture.
class RatH {
public:
    RatH() : num_(), den_(Scalar(1)) {}
    RatH(Scalar constant) : num_(std::move(constant)), den_(Scalar(1)) {}
    RatH(long constant) : num_(Scalar(constant)), den_(Scalar(1)) {}
    RatH(HPoly numerator) : num_(std::move(numerator)), den_(Scalar(1)) {}
    RatH(HPoly numerator, HPoly denominator);

    static RatH var() { return RatH(HPoly::var()); }
    /// 1 / (H + k).
    static RatH inv_var_plus(long k) {
        return RatH(HPoly(Scalar(1)), HPoly::var_plus(Scalar(k)));
    }

    const HPoly& num() const { return num_; }
    const HPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatH operator-() const;
    friend RatH operator+(const RatH& a, const RatH& b);
    friend RatH operator-(const RatH& a, const RatH& b);
    friend RatH operator*(const RatH& a, const RatH& b);
    friend RatH operator/(const RatH& a, const RatH& b);
    RatH operator*(const Scalar& s) const;
    RatH& operator+=(const RatH& o) { return *this = *this + o; }
    RatH& operator*=(const RatH& o) { return *this = *this * o; }

    RatH inv() const;

    /// Canonical forms make equality a plain comparison.
    friend bool operator==(const RatH& a, const RatH& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatH& a, const RatH& b) { return !(a == b); }

    /// Substitution H -> H + k, reduced.
    RatH shifted(long k) const;

    /// Exact evaluation; throws pole_error when the denominator vanishes.
    Scalar eval(const Scalar& t) const;
    bool has_pole_at(const Scalar& t) const { return den_.eval(t).is_zero(); }

    std::string str() const;

private:
    void reduce();
    HPoly num_;
    HPoly den_;
};

inline RatH operator*(const Scalar& s, const RatH& f) { return f * s; }

} // namespace dra
