#pragma once

#include "dra/clifford.hpp"
#include "dra/coset.hpp"
#include "dra/weyl_clifford.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dra {

/// Basis key of V = Cl(n) (x) C[x^1..x^n]: x-exponents and gamma subset.
using PolyKey = std::pair<MultiIndex, GammaSet>;

/// Clifford-valued polynomial, the module the algebra acts on.
/// Graded by total x-degree; the degree-d component is an H-eigenvector
/// with eigenvalue -(d + n/2).
class CliffordPolynomial {
public:
    CliffordPolynomial() = default;
    explicit CliffordPolynomial(int n) : n_(n) {}

    static CliffordPolynomial one(int n);
    static CliffordPolynomial monomial(int n, MultiIndex alpha, GammaSet s,
                                       Scalar coeff = Scalar(1));
    /// p in Cl(n) as a degree-0 element.
    static CliffordPolynomial from_clifford(int n, const CliffordElement& p);

    int n() const { return n_; }
    const std::map<PolyKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const MultiIndex& alpha, GammaSet s) const;

    void add_term(MultiIndex alpha, GammaSet s, Scalar coeff);

    CliffordPolynomial operator-() const;
    CliffordPolynomial& operator+=(const CliffordPolynomial& o);
    CliffordPolynomial& operator-=(const CliffordPolynomial& o);
    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a += b;
    }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
        return a -= b;
    }
    CliffordPolynomial operator*(const Scalar& s) const;

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return !(a == b);
    }

    int degree() const; // max total x-degree, -1 for zero
    bool is_homogeneous() const;
    CliffordPolynomial component(int d) const;
    std::vector<int> occurring_degrees() const;

    /// Clifford part of the degree-0 component.
    CliffordElement constant_term() const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<PolyKey, Scalar> terms_;
};

/// H-eigenvalue -(d + n/2) on the degree-d component; n >= 1, d >= 0.
Scalar h_eigenvalue(int d, int n);

/// Module action of a normal-ordered element: del as formal partials,
/// x and gamma as left multiplication.
CliffordPolynomial act(const WCElement& a, const CliffordPolynomial& v, const Algebra& alg);

/// Action with left rational-H coefficients, evaluated per homogeneous
/// component; a pole at an occurring eigenvalue raises pole_error naming
/// the component degree.
CliffordPolynomial act(const HCoeffElement& a, const CliffordPolynomial& v, const Algebra& alg);

/// Right Clifford action v * p.
CliffordPolynomial right_mul(const CliffordPolynomial& v, const CliffordElement& p,
                             const Algebra& alg);

/// Product of del-free elements (both factors in Cl(n) (x) C[x]).
CliffordPolynomial v_mul(const CliffordPolynomial& a, const CliffordPolynomial& b,
                         const Algebra& alg);

bool is_solution(const CliffordPolynomial& v, const Algebra& alg);

/// N-truncated extremal projector P_N = sum_{m<=N} psi_m(H) Y^m X^m with
/// polynomial coefficients; N defaults to degree(v)+1 when negative.
CliffordPolynomial truncated_projector(const CliffordPolynomial& v, int N, const Algebra& alg);

/// Componentwise extremal projector on V: each graded piece gets
/// sum_m phi_m(eigenvalue) Y^m X^m. Pole-free for n >= 1.
CliffordPolynomial projector_apply(const CliffordPolynomial& v, const Algebra& alg);

/// Exact kernel basis of the Dirac operator gamma^k del_k on the degree-d
/// component, by exact elimination over the scalar field. Basis vectors
/// are normalized so the leading (lexicographically greatest free) term
/// has coefficient 1.
std::vector<CliffordPolynomial> dirac_kernel(int d, const Algebra& alg);
/// Serial reference for the elimination path.
std::vector<CliffordPolynomial> dirac_kernel_serial(int d, const Algebra& alg);

/// All degree-d x-multi-indices in ascending lexicographic order.
std::vector<MultiIndex> degree_multi_indices(int n, int d);

/// Exact rank of the span of the given vectors.
int span_rank(const std::vector<CliffordPolynomial>& vecs);

namespace detail {
/// Row-reduce over Scalar; returns pivot column per row count. The parallel
/// flag switches the row-update loop to OpenMP.
struct DenseMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Scalar> a;
    Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Scalar& at(size_t r, size_t c) const { return a[r * cols + c]; }
};
std::vector<size_t> rref(DenseMatrix& m, bool parallel);
} // namespace detail

} // namespace dra
