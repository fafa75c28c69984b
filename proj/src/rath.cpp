#include "dra/rath.hpp"

namespace dra {

HPoly HPoly::operator-() const {
    std::vector<Scalar> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return HPoly(std::move(out));
}

HPoly operator+(const HPoly& a, const HPoly& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return HPoly(std::move(out));
}

HPoly operator-(const HPoly& a, const HPoly& b) { return a + (-b); }

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return HPoly(std::move(out));
}

HPoly HPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return HPoly();
    std::vector<Scalar> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return HPoly(std::move(out));
}

Scalar HPoly::eval(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

HPoly HPoly::shifted(long k) const {
    if (k == 0) return *this;
    HPoly acc;
    HPoly x = HPoly::var_plus(Scalar(k));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + HPoly(*it);
    return acc;
}

std::pair<HPoly, HPoly> HPoly::divrem(const HPoly& d) const {
    if (d.is_zero()) throw std::domain_error("HPoly: division by zero polynomial");
    HPoly rem = *this;
    if (rem.degree() < d.degree()) return {HPoly(), rem};
    std::vector<Scalar> q(static_cast<size_t>(rem.degree() - d.degree() + 1), Scalar(0));
    Scalar lead_inv = d.leading().inv();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Scalar factor = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = factor;
        std::vector<Scalar> sub(static_cast<size_t>(shift), Scalar(0));
        for (const Scalar& dc : d.coeffs()) sub.push_back(dc * factor);
        rem = rem - HPoly(std::move(sub));
    }
    return {HPoly(std::move(q)), rem};
}

HPoly HPoly::gcd(HPoly a, HPoly b) {
    while (!b.is_zero()) {
        HPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

HPoly HPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * leading().inv();
}

std::string HPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Scalar ck = coeff(k);
        if (ck.is_zero()) continue;
        std::string cs = ck.str();
        bool simple = ck.is_rational();
        if (!out.empty()) {
            if (simple && ck.re().sign() < 0) {
                out += " - ";
                cs = (-ck).str();
            } else {
                out += " + ";
            }
        }
        if (k == 0) {
            out += simple ? cs : "(" + cs + ")";
        } else {
            std::string var = k == 1 ? "H" : "H^" + std::to_string(k);
            if (ck == Scalar(1)) out += var;
            else if (ck == Scalar(-1)) out += "-" + var;
            else out += (simple ? cs : "(" + cs + ")") + "*" + var;
        }
    }
    return out;
}

RatH::RatH(HPoly numerator, HPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("RatH: zero denominator");
    reduce();
}

void RatH::reduce() {
    if (num_.is_zero()) {
        den_ = HPoly(Scalar(1));
        return;
    }
    HPoly g = HPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    if (!den_.is_monic()) {
        Scalar lead_inv = den_.leading().inv();
        num_ = num_ * lead_inv;
        den_ = den_ * lead_inv;
    }
}

RatH RatH::operator-() const {
    RatH out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatH operator+(const RatH& a, const RatH& b) {
    return RatH(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatH operator-(const RatH& a, const RatH& b) { return a + (-b); }

RatH operator*(const RatH& a, const RatH& b) {
    return RatH(a.num_ * b.num_, a.den_ * b.den_);
}

RatH operator/(const RatH& a, const RatH& b) { return a * b.inv(); }

RatH RatH::operator*(const Scalar& s) const {
    RatH out;
    out.num_ = num_ * s;
    out.den_ = s.is_zero() ? HPoly(Scalar(1)) : den_;
    return out;
}

RatH RatH::inv() const {
    if (is_zero()) throw std::domain_error("RatH: inverse of zero");
    return RatH(den_, num_);
}

RatH RatH::shifted(long k) const {
    if (k == 0) return *this;
    return RatH(num_.shifted(k), den_.shifted(k));
}

Scalar RatH::eval(const Scalar& t) const {
    Scalar d = den_.eval(t);
    if (d.is_zero()) throw pole_error(t);
    return num_.eval(t) / d;
}

std::string RatH::str() const {
    if (is_polynomial()) {
        Scalar lead = den_.coeff(0);
        if (lead == Scalar(1)) return num_.str();
        return (num_ * lead.inv()).str();
    }
    std::string n = num_.str();
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

} // namespace dra
