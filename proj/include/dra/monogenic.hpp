#pragma once

#include "dra/coset.hpp"
#include "dra/polymodule.hpp"

#include <string>
#include <vector>

namespace dra {

/// Slot counts of the orbit-symmetrized symbol
/// [eta^a x^r gamma^s del^t ; i_1..i_m], m = 2a + r + s + t.
/// Negative x_count makes the symbol zero.
struct BracketSpec {
    int eta_pairs = 0;  // a
    int x_count = 0;    // r (may be negative: symbol is 0)
    int gamma_count = 0; // s
    int del_count = 0;  // t

    int arity() const { return 2 * eta_pairs + x_count + gamma_count + del_count; }
};

/// Expansion of the bracket symbol over canonical orbit representatives:
/// eta-pairs unordered, x-block and del-block unordered, gamma-block in
/// slot order. Throws on arity mismatch (unless x_count < 0, which gives 0).
WCElement bracket(const BracketSpec& spec, const std::vector<int>& indices, const Algebra& alg);

/// Fully symmetrized sum over S_m divided by |G_{a,r,s,t}|; equals
/// bracket() and serves as its independent oracle.
WCElement bracket_symmetrized_oracle(const BracketSpec& spec, const std::vector<int>& indices,
                                     const Algebra& alg);

/// [eta^a x^r gamma^{s+2} del^t] = 2(a+1) [eta^{a+1} x^r gamma^s del^t]:
/// the scaled reduced spec for an input with gamma_count >= 2.
std::pair<Scalar, BracketSpec> bracket_gamma_reduce(const BracketSpec& spec);

/// Closed form for ad(X) of a bracket with gamma_count in {0,1}:
///   s = 0:  c [eta^a x^{r-1} gamma del^t]
///   s = 1:  2c(a+1) [eta^{a+1} x^{r-1} del^t] + 2c(t+1) [eta^a x^r del^{t+1}]
WCElement ad_X_bracket(const BracketSpec& spec, const std::vector<int>& indices,
                       const Algebra& alg);

/// Closed form for ad(X)^{2k+r}([x^m; i_1..i_m]), r in {0,1}:
///   (-1)^k k! c^r sum_{t=0}^{k} [eta^t x^{m-k-t-r} gamma^r del^{k-t}].
WCElement ad_X_power_xm(int m, int k, int r, const std::vector<int>& indices, const Algebra& alg);

/// Denominator-cleared reduction-algebra generators acting on solutions.
struct HatOperator {
    enum class Kind { hat_x, hat_gamma, hat_del, tilde_gamma };
    Kind kind;
    int index;
    HCoeffElement realized;
};

/// hat_x^i = (H+1) P(x^i), hat_gamma^i = (H+1) P(gamma^i), hat_del_i = del_i,
/// tilde_gamma^i = hat_gamma^i / (1 - n/2) (n != 2).
HatOperator make_hat(HatOperator::Kind kind, int i, const Algebra& alg);

/// Applies a hat operator to a solution; input must satisfy X.v = 0.
CliffordPolynomial hat_apply(const HatOperator& op, const CliffordPolynomial& v,
                             const Algebra& alg);

/// Operator tilde_p for p in Cl(n): tilde_gamma word per monomial of p,
/// extended coefficient-wise; tilde_p . 1 = p. Requires n != 2.
CliffordPolynomial tilde_apply(const CliffordElement& p, const CliffordPolynomial& v,
                               const Algebra& alg);

/// The closed product formula for hat_x^{i_1} ... hat_x^{i_m} as an element
/// of A'/I' with left polynomial H-coefficients.
HCoeffElement hat_product_closed_form(const std::vector<int>& indices, const Algebra& alg);

/// Composition hat_x^{i_1} ... hat_x^{i_m} applied to v (rightmost first);
/// the oracle for the closed form.
CliffordPolynomial hat_x_compose(const std::vector<int>& indices, const CliffordPolynomial& v,
                                 const Algebra& alg);

/// The explicit degree-m polynomial solution of the closed form, right
/// multiplied by the Clifford factor p. X annihilates the result.
CliffordPolynomial solution_from_indices(const std::vector<int>& indices,
                                         const CliffordElement& p, const Algebra& alg);

/// The three displayed summands of the solution closed form (leading term,
/// tilde-Y sum, tilde-F sum) before right multiplication; their sum is
/// solution_from_indices(indices, 1).
struct SolutionParts {
    CliffordPolynomial leading;
    CliffordPolynomial gamma_sum;
    CliffordPolynomial eta_sum;
};
SolutionParts solution_closed_form_parts(const std::vector<int>& indices, const Algebra& alg);

/// Formal hat-word combination reconstructing a solution from 1.
struct Reconstruction {
    struct Term {
        Scalar coeff;
        std::vector<int> x_indices; // sorted word of hat_x indices
        CliffordElement clifford;   // tilde factor
    };
    std::vector<Term> terms;
};

/// Writes phi in V^+ as sum coeff * hat_x-word o tilde_p with
/// apply_reconstruction(.) . 1 = phi. Requires X.phi = 0 and n != 2.
Reconstruction reconstruct(const CliffordPolynomial& phi, const Algebra& alg);

CliffordPolynomial apply_reconstruction(const Reconstruction& rec, const Algebra& alg);

/// Applies hat_del^beta / beta! for a maximal-total-degree multi-index beta
/// with nonzero Clifford coefficient; returns that coefficient p_beta.
CliffordElement extract_clifford_top(const CliffordPolynomial& phi, const Algebra& alg);

} // namespace dra
