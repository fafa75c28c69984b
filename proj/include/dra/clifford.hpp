#pragma once

#include "dra/errors.hpp"
#include "dra/rational.hpp"
#include "dra/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dra {

/// Symmetric invertible rational metric eta for Cl(eta).
/// Stores both index pictures: up(i,j) = eta^{ij}, down(i,j) = eta_{ij},
/// with up * down = identity checked at construction.
class Metric {
public:
    /// From the upper-index matrix eta^{ij}; computes the inverse exactly.
    explicit Metric(std::vector<std::vector<Rational>> up);

    static Metric euclidean(int n);
    /// diag(1,...,1,-1).
    static Metric lorentzian(int n);
    /// Anti-diagonal ones.
    static Metric off_diagonal(int n);
    static Metric diagonal(std::vector<Rational> entries);

    /// "diag:1,1,-1", "euclidean"/"lorentzian"/"offdiag" shorthands.
    static Metric parse(std::string_view text, int n);

    int n() const { return n_; }
    const Rational& up(int i, int j) const { return up_[idx(i, j)]; }
    const Rational& down(int i, int j) const { return down_[idx(i, j)]; }

    friend bool operator==(const Metric& a, const Metric& b) {
        return a.n_ == b.n_ && a.up_ == b.up_;
    }
    friend bool operator!=(const Metric& a, const Metric& b) { return !(a == b); }

    std::string str() const;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
    }
    int n_ = 0;
    std::vector<Rational> up_;
    std::vector<Rational> down_;
};

/// Index subsets encoded as bitmasks: bit i-1 set means gamma^i present.
using GammaSet = std::uint32_t;

int gamma_count(GammaSet s);
std::string gamma_str(GammaSet s);

/// Element of Cl(eta): Scalar combination of ordered gamma monomials.
/// Canonical basis = strictly increasing index subsets; products re-expand
/// into that basis, so equality is coefficient comparison.
class CliffordElement {
public:
    CliffordElement() = default;
    explicit CliffordElement(Scalar constant) { add_term(0, std::move(constant)); }

    static CliffordElement generator(int i) {
        CliffordElement e;
        e.add_term(GammaSet(1) << (i - 1), Scalar(1));
        return e;
    }
    static CliffordElement monomial(GammaSet s, Scalar coeff = Scalar(1)) {
        CliffordElement e;
        e.add_term(s, std::move(coeff));
        return e;
    }

    const std::map<GammaSet, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(GammaSet s) const;

    void add_term(GammaSet s, Scalar coeff);

    CliffordElement operator-() const;
    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
    CliffordElement operator*(const Scalar& s) const;

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
        return !(a == b);
    }

    /// "c * g1^g3 + ..." in ascending monomial order.
    std::string str() const;

private:
    std::map<GammaSet, Scalar> terms_;
};

/// Product in Cl(eta), re-expanded into the strictly increasing basis.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b,
                             const Metric& g);

/// gamma^a * (ordered monomial), the single-generator expansion step.
CliffordElement clifford_mul_generator(int a, GammaSet s, const Metric& g);

enum class LoweredKind { x_down, del_up, gamma_down };

/// Expansion of x_i, del^i or gamma_i over the upper-index generators:
/// the list of (j, coefficient) with coefficient = eta_{ij} resp. eta^{ij}.
std::vector<std::pair<int, Rational>> lower_raise(LoweredKind kind, int i, const Metric& g);

} // namespace dra
