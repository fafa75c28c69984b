#pragma once

#include "dra/rath.hpp"
#include "dra/weyl_clifford.hpp"

#include <map>
#include <string>
#include <vector>

namespace dra {

/// Extremal-projector coefficient data for osp(1|2):
///   kappa_k(H) = -k/2 (k even), H + (k+1)/2 (k odd)
///   phi_0 = 1, phi_{k+1} = (-1)^{k+1} phi_k / kappa_{k+1}
///   psi_k(t) = (t+1)...(t+j) phi_k(t), j = ceil(N/2), polynomial for k <= N.
HPoly projector_kappa(int k);
RatH projector_phi(int k);
/// Closed form: phi_{2k} = (1/k!) prod_{m=0}^{k-1} 1/(H+m+1),
/// phi_{2k+1} = (-1/k!) prod_{m=0}^{k} 1/(H+m+1).
RatH projector_phi_closed(int k);
HPoly projector_psi(int k, int truncation);

/// Element of the localized algebra with left rational-H coefficients:
/// sum phi_m(H) * m over normal-ordered monomials. Moving coefficients
/// across monomials uses phi(H) m = m phi(H - wt(m)), wt = xdeg - ddeg.
class HCoeffElement {
public:
    HCoeffElement() = default;
    explicit HCoeffElement(int n) : n_(n) {}

    static HCoeffElement from_wc(const WCElement& e);
    /// phi(H) as an element (empty monomial).
    static HCoeffElement from_rath(RatH phi, const Algebra& a);

    int n() const { return n_; }
    const std::map<WCMonomial, RatH>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(WCMonomial m, RatH coeff);

    HCoeffElement operator-() const;
    HCoeffElement& operator+=(const HCoeffElement& o);
    HCoeffElement& operator-=(const HCoeffElement& o);
    friend HCoeffElement operator+(HCoeffElement a, const HCoeffElement& b) { return a += b; }
    friend HCoeffElement operator-(HCoeffElement a, const HCoeffElement& b) { return a -= b; }

    /// Left multiplication by phi(H).
    HCoeffElement left_mul(const RatH& phi) const;
    HCoeffElement operator*(const Scalar& s) const;

    int parity() const;
    HCoeffElement parity_part(int p) const;

    friend bool operator==(const HCoeffElement& a, const HCoeffElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HCoeffElement& a, const HCoeffElement& b) { return !(a == b); }

    std::string str() const;

private:
    int n_ = 0;
    std::map<WCMonomial, RatH> terms_;
};

/// Product in the localized algebra (left-coefficient canonical form).
HCoeffElement hc_mul(const HCoeffElement& a, const HCoeffElement& b, const Algebra& alg);

/// ad(X)^k and ad_r(Y)^k taken modulo trailing/leading g_+ resp. g_-
/// content: coefficients shift, monomials take the plain super-bracket.
/// These are the ad-powers entering the diamond product.
HCoeffElement ad_X_mod(const HCoeffElement& b, const Algebra& alg);
HCoeffElement ad_rY_mod(const HCoeffElement& a, const Algebra& alg);

/// P * b modulo I' = A'g_+ : sum_k phi_k(H) Y^k ad(X)^k(b). The Y-parts are
/// kept (only trailing g_+ content is dropped), so the result is a
/// representative of P(b) in A'/I'.
HCoeffElement project_mod_Iprime(const HCoeffElement& b, const Algebra& alg);

/// Representative of an element of A'/II, II = g_- A' + A' g_+.
/// Equality of cosets is semantic; see coset_eq in polymodule terms.
struct CosetRep {
    HCoeffElement rep;
};

/// Diamond product on A'/II:
///   a <> b = ab + sum_{k>=1} ad_r(Y)^k(a) phi_k(H-k) ad(X)^k(b)  (+ II).
CosetRep diamond(const CosetRep& a, const CosetRep& b, const Algebra& alg);

inline CosetRep coset_of(const WCElement& e) { return CosetRep{HCoeffElement::from_wc(e)}; }

/// Semantic coset equality through the module action on V^+.
struct CosetEqResult {
    enum class Status { equal, not_equal, indeterminate };
    Status status = Status::indeterminate;
    /// degrees where every check was pole-skipped
    std::vector<int> skipped_degrees;
    /// first failing graded component, empty when equal
    std::string witness;
    bool equal() const { return status == Status::equal; }
};

/// True iff P(a.v) = P(b.v) for every oracle kernel basis vector v of
/// degree <= degree_bound. Components whose coefficients hit a pole are
/// skipped and reported; all-skipped yields an indeterminate result.
CosetEqResult coset_eq(const CosetRep& a, const CosetRep& b, int degree_bound,
                       const Algebra& alg);

} // namespace dra
