#pragma once

#include "dra/clifford.hpp"
#include "dra/errors.hpp"
#include "dra/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dra {

using MultiIndex = std::vector<std::uint32_t>;

std::uint32_t multi_total(const MultiIndex& m);

/// Normal-ordered monomial x^alpha del^beta gamma^S of W(2n|n).
/// The del-part carries lower indices; gammas are a strictly increasing
/// subset. Parity = |S| mod 2.
struct WCMonomial {
    MultiIndex x;
    MultiIndex d;
    GammaSet gammas = 0;

    bool is_identity() const { return gammas == 0 && multi_total(x) == 0 && multi_total(d) == 0; }
    int parity() const { return gamma_count(gammas) & 1; }
    /// Word length |alpha| + |beta| + |S|.
    std::uint32_t length() const {
        return multi_total(x) + multi_total(d) + static_cast<std::uint32_t>(gamma_count(gammas));
    }
    /// phi(H) * m = m * phi(H - weight), weight = |alpha| - |beta|.
    long h_shift_weight() const {
        return static_cast<long>(multi_total(x)) - static_cast<long>(multi_total(d));
    }

    friend bool operator==(const WCMonomial& a, const WCMonomial& b) {
        return a.x == b.x && a.d == b.d && a.gammas == b.gammas;
    }
    friend bool operator<(const WCMonomial& a, const WCMonomial& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.d != b.d) return a.d < b.d;
        return a.gammas < b.gammas;
    }

    std::string str() const;
};

/// Element of W(2n|n) in the normal-ordered canonical basis.
class WCElement {
public:
    WCElement() = default;
    explicit WCElement(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<WCMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const WCMonomial& m) const;

    void add_term(WCMonomial m, Scalar coeff);

    WCElement operator-() const;
    WCElement& operator+=(const WCElement& o);
    WCElement& operator-=(const WCElement& o);
    friend WCElement operator+(WCElement a, const WCElement& b) { return a += b; }
    friend WCElement operator-(WCElement a, const WCElement& b) { return a -= b; }
    WCElement operator*(const Scalar& s) const;

    friend bool operator==(const WCElement& a, const WCElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WCElement& a, const WCElement& b) { return !(a == b); }

    /// -1 for zero, else 0/1 when parity-homogeneous, -2 when mixed.
    int parity() const;
    bool parity_homogeneous() const { return parity() != -2; }
    /// Even / odd part split.
    WCElement parity_part(int p) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<WCMonomial, Scalar> terms_;
};

inline WCElement operator*(const Scalar& s, const WCElement& e) { return e * s; }

/// The osp(1|2) images under the oscillator embedding.
struct OspGenerators {
    WCElement X; // c gamma^i del_i  (c = i/sqrt2; Dirac operator up to scale)
    WCElement Y; // c gamma^i x_i
    WCElement H; // -(x^i del_i) - n/2
    WCElement E; // -1/2 del^i del_i
    WCElement F; // 1/2 x^i x_i
};

/// Algebra context: rank n and metric together with the products,
/// super-commutators and adjoint maps of W(2n|n). Elements are immutable;
/// the context is shared read-only.
class Algebra {
public:
    explicit Algebra(Metric metric);

    int n() const { return metric_.n(); }
    const Metric& metric() const { return metric_; }

    WCElement zero() const { return WCElement(n()); }
    WCElement scalar(Scalar s) const;
    WCElement one() const { return scalar(Scalar(1)); }
    WCElement monomial(WCMonomial m, Scalar coeff = Scalar(1)) const;

    WCElement x(int i) const;
    WCElement d(int i) const;
    WCElement g(int i) const;
    /// x_i = eta_{ij} x^j, del^i = eta^{ij} del_j, gamma_i = eta_{ij} gamma^j.
    WCElement x_down(int i) const;
    WCElement d_up(int i) const;
    WCElement g_down(int i) const;

    const OspGenerators& osp() const { return osp_; }

    /// Normal-ordered product by closed-form contraction. Uses OpenMP over
    /// term pairs past a size threshold.
    WCElement mul(const WCElement& a, const WCElement& b) const;
    /// Serial reference: repeated single-swap rewriting with coefficient
    /// accumulation. Kept for testing against mul().
    WCElement mul_reference(const WCElement& a, const WCElement& b) const;

    /// Product of two normal-ordered monomials (coefficient 1 each).
    WCElement mul_monomials(const WCMonomial& a, const WCMonomial& b) const;

    /// ab - (-1)^{|a||b|} ba, extended bilinearly over parity parts.
    WCElement super_commutator(const WCElement& a, const WCElement& b) const;

    WCElement ad_X(const WCElement& a) const { return super_commutator(osp_.X, a); }
    WCElement ad_rY(const WCElement& a) const { return super_commutator(a, osp_.Y); }

    WCElement pow(const WCElement& a, unsigned k) const;

    void check_context(const WCElement& e) const;

private:
    Metric metric_;
    OspGenerators osp_;
};

} // namespace dra
