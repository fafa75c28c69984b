#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dra {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// Thin wrapper over GMP's mpq type. All constructors canonicalize, so
/// value comparison is plain mpq comparison.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}

    /// num/den, reduced; throws on den == 0.
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = Mpq(num);
        v_ /= Mpq(den);
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "123", "-4/6" (reduced on the way in).
    static Rational parse(std::string_view s);

    BigInt num() const { return BigInt(numerator(v_)); }
    BigInt den() const { return BigInt(denominator(v_)); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    /// "p" or "p/q".
    std::string str() const;

private:
    using Mpq = boost::multiprecision::mpq_rational;
    Mpq v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace dra
