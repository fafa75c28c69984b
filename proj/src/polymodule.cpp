#include "dra/polymodule.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <mutex>
#include <set>

namespace dra {

CliffordPolynomial CliffordPolynomial::one(int n) {
    CliffordPolynomial v(n);
    v.add_term(MultiIndex(static_cast<size_t>(n), 0), 0, Scalar(1));
    return v;
}

CliffordPolynomial CliffordPolynomial::monomial(int n, MultiIndex alpha, GammaSet s,
                                                Scalar coeff) {
    CliffordPolynomial v(n);
    v.add_term(std::move(alpha), s, std::move(coeff));
    return v;
}

CliffordPolynomial CliffordPolynomial::from_clifford(int n, const CliffordElement& p) {
    CliffordPolynomial v(n);
    for (const auto& [s, c] : p.terms()) v.add_term(MultiIndex(static_cast<size_t>(n), 0), s, c);
    return v;
}

Scalar CliffordPolynomial::coeff(const MultiIndex& alpha, GammaSet s) const {
    auto it = terms_.find({alpha, s});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CliffordPolynomial::add_term(MultiIndex alpha, GammaSet s, Scalar coeff) {
    if (coeff.is_zero()) return;
    PolyKey key{std::move(alpha), s};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordPolynomial CliffordPolynomial::operator-() const {
    CliffordPolynomial out(n_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

CliffordPolynomial CliffordPolynomial::operator*(const Scalar& s) const {
    CliffordPolynomial out(n_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
}

int CliffordPolynomial::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(multi_total(k.first)));
    return d;
}

bool CliffordPolynomial::is_homogeneous() const {
    return occurring_degrees().size() <= 1;
}

CliffordPolynomial CliffordPolynomial::component(int d) const {
    CliffordPolynomial out(n_);
    for (const auto& [k, c] : terms_)
        if (static_cast<int>(multi_total(k.first)) == d) out.terms_.emplace(k, c);
    return out;
}

std::vector<int> CliffordPolynomial::occurring_degrees() const {
    std::set<int> ds;
    for (const auto& [k, c] : terms_) ds.insert(static_cast<int>(multi_total(k.first)));
    return {ds.begin(), ds.end()};
}

CliffordElement CliffordPolynomial::constant_term() const {
    CliffordElement out;
    for (const auto& [k, c] : terms_)
        if (multi_total(k.first) == 0) out.add_term(k.second, c);
    return out;
}

std::string CliffordPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        Scalar coeff = c;
        if (!out.empty()) {
            if (coeff.is_rational() && coeff.re().sign() < 0) {
                out += " - ";
                coeff = -coeff;
            } else {
                out += " + ";
            }
        }
        std::string cs = coeff.str();
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (needs_parens) cs = "(" + cs + ")";
        std::string mono;
        for (size_t i = 0; i < k.first.size(); ++i) {
            if (k.first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (k.first[i] > 1) mono += "^" + std::to_string(k.first[i]);
        }
        if (k.second != 0) {
            if (!mono.empty()) mono += "*";
            mono += gamma_str(k.second);
        }
        if (mono.empty()) out += cs;
        else if (coeff == Scalar(1)) out += mono;
        else if (coeff == Scalar(-1)) out += "-" + mono;
        else out += cs + "*" + mono;
    }
    return out;
}

Scalar h_eigenvalue(int d, int n) {
    if (n < 1) throw std::domain_error("h_eigenvalue: n must be >= 1");
    if (d < 0) throw std::domain_error("h_eigenvalue: degree must be >= 0");
    return Scalar(Rational(-(2 * static_cast<long>(d) + n), 2));
}

namespace {

/// x^alpha del^beta gamma^S applied to a single module basis term.
void act_monomial(const WCMonomial& m, const MultiIndex& alpha, GammaSet s, const Scalar& coeff,
                  const Metric& metric, CliffordPolynomial& out) {
    // derivative part
    BigInt factor = 1;
    MultiIndex shifted = alpha;
    for (size_t i = 0; i < m.d.size(); ++i) {
        if (m.d[i] == 0) continue;
        if (alpha[i] < m.d[i]) return;
        for (std::uint32_t r = 0; r < m.d[i]; ++r) factor *= BigInt(alpha[i] - r);
        shifted[i] = alpha[i] - m.d[i];
    }
    for (size_t i = 0; i < m.x.size(); ++i) shifted[i] += m.x[i];
    Scalar c = coeff * Scalar(Rational(factor));
    if (m.gammas == 0) {
        out.add_term(std::move(shifted), s, std::move(c));
        return;
    }
    CliffordElement prod =
        clifford_mul(CliffordElement::monomial(m.gammas), CliffordElement::monomial(s), metric);
    for (const auto& [t, d] : prod.terms()) out.add_term(shifted, t, c * d);
}

} // namespace

CliffordPolynomial act(const WCElement& a, const CliffordPolynomial& v, const Algebra& alg) {
    alg.check_context(a);
    CliffordPolynomial out(alg.n());
    for (const auto& [m, c] : a.terms())
        for (const auto& [key, vc] : v.terms())
            act_monomial(m, key.first, key.second, c * vc, alg.metric(), out);
    return out;
}

CliffordPolynomial act(const HCoeffElement& a, const CliffordPolynomial& v, const Algebra& alg) {
    CliffordPolynomial out(alg.n());
    for (const auto& [m, phi] : a.terms()) {
        CliffordPolynomial w(alg.n());
        for (const auto& [key, vc] : v.terms())
            act_monomial(m, key.first, key.second, vc, alg.metric(), w);
        // left coefficient phi(H): evaluate on each homogeneous component
        for (int d : w.occurring_degrees()) {
            Scalar ev = h_eigenvalue(d, alg.n());
            Scalar factor;
            try {
                factor = phi.eval(ev);
            } catch (const pole_error&) {
                throw pole_error(ev, d);
            }
            out += w.component(d) * factor;
        }
    }
    return out;
}

CliffordPolynomial right_mul(const CliffordPolynomial& v, const CliffordElement& p,
                             const Algebra& alg) {
    CliffordPolynomial out(alg.n());
    for (const auto& [key, c] : v.terms()) {
        CliffordElement prod =
            clifford_mul(CliffordElement::monomial(key.second), p, alg.metric());
        for (const auto& [t, d] : prod.terms()) out.add_term(key.first, t, c * d);
    }
    return out;
}

CliffordPolynomial v_mul(const CliffordPolynomial& a, const CliffordPolynomial& b,
                         const Algebra& alg) {
    CliffordPolynomial out(alg.n());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            MultiIndex alpha = ka.first;
            for (size_t i = 0; i < alpha.size(); ++i) alpha[i] += kb.first[i];
            CliffordElement prod = clifford_mul(CliffordElement::monomial(ka.second),
                                                CliffordElement::monomial(kb.second), alg.metric());
            Scalar c = ca * cb;
            for (const auto& [t, d] : prod.terms()) out.add_term(alpha, t, c * d);
        }
    }
    return out;
}

bool is_solution(const CliffordPolynomial& v, const Algebra& alg) {
    return act(alg.osp().X, v, alg).is_zero();
}

namespace {

/// Apply a polynomial in H componentwise (always exact).
CliffordPolynomial apply_hpoly(const HPoly& p, const CliffordPolynomial& v, int n) {
    CliffordPolynomial out(n);
    for (int d : v.occurring_degrees()) out += v.component(d) * p.eval(h_eigenvalue(d, n));
    return out;
}

} // namespace

CliffordPolynomial truncated_projector(const CliffordPolynomial& v, int N, const Algebra& alg) {
    if (N < 0) N = v.degree() + 1;
    if (N < 0) N = 0;
    // Horner in Y: sum_m psi_m(H) Y^m X^m = psi_0(H) + Y (psi_1(H-1) X + Y (...))
    // using psi(H) Y^m = Y^m psi(H-m); N applications of Y instead of N(N+1)/2.
    std::vector<CliffordPolynomial> xpow{v};
    for (int m = 1; m <= N; ++m) {
        CliffordPolynomial next = act(alg.osp().X, xpow.back(), alg);
        if (next.is_zero()) break;
        xpow.push_back(std::move(next));
    }
    const int top = static_cast<int>(xpow.size()) - 1;
    CliffordPolynomial acc(alg.n());
    for (int m = top; m >= 0; --m) {
        if (m < top) acc = act(alg.osp().Y, acc, alg);
        acc += apply_hpoly(projector_psi(m, N).shifted(-m), xpow[static_cast<size_t>(m)], alg.n());
    }
    return acc;
}

CliffordPolynomial projector_apply(const CliffordPolynomial& v, const Algebra& alg) {
    CliffordPolynomial out(alg.n());
    for (int d : v.occurring_degrees()) {
        CliffordPolynomial comp = v.component(d);
        Scalar ev = h_eigenvalue(d, alg.n());
        std::vector<CliffordPolynomial> xpow{std::move(comp)};
        while (true) {
            CliffordPolynomial next = act(alg.osp().X, xpow.back(), alg);
            if (next.is_zero()) break;
            xpow.push_back(std::move(next));
        }
        // every Y^m X^m image lands back in degree d, so phi_m evaluates at
        // the fixed eigenvalue and the sum Horners in Y
        const int top = static_cast<int>(xpow.size()) - 1;
        CliffordPolynomial acc(alg.n());
        for (int m = top; m >= 0; --m) {
            if (m < top) acc = act(alg.osp().Y, acc, alg);
            acc += xpow[static_cast<size_t>(m)] * projector_phi(m).eval(ev);
        }
        out += acc;
    }
    return out;
}

std::vector<MultiIndex> degree_multi_indices(int n, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<size_t>(n), 0);
    // lexicographic enumeration by recursion on the first coordinate
    struct Rec {
        int n;
        std::vector<MultiIndex>& out;
        MultiIndex& cur;
        void go(int pos, int remaining) {
            if (pos == n - 1) {
                cur[static_cast<size_t>(pos)] = static_cast<std::uint32_t>(remaining);
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<size_t>(pos)] = static_cast<std::uint32_t>(v);
                go(pos + 1, remaining - v);
            }
        }
    } rec{n, out, cur};
    rec.go(0, d);
    return out;
}

namespace detail {

std::vector<size_t> rref(DenseMatrix& m, bool parallel) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t pivot = row;
        while (pivot < m.rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row)
            for (size_t c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Scalar inv = m.at(row, col).inv();
        for (size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        // compact the nonzero structure once: the pivot row is sparse and
        // most rows have a zero in this column
        std::vector<size_t> prow_cols;
        for (size_t c = col; c < m.cols; ++c)
            if (!m.at(row, c).is_zero()) prow_cols.push_back(c);
        std::vector<size_t> targets;
        targets.reserve(m.rows);
        for (size_t r = 0; r < m.rows; ++r)
            if (r != row && !m.at(r, col).is_zero()) targets.push_back(r);
        auto update_row = [&](size_t r) {
            Scalar f = m.at(r, col);
            for (size_t c : prow_cols) m.at(r, c) -= f * m.at(row, c);
        };
#ifdef _OPENMP
        if (parallel && targets.size() >= 32 && prow_cols.size() >= 16) {
            const long count = static_cast<long>(targets.size());
#pragma omp parallel for schedule(static)
            for (long t = 0; t < count; ++t) update_row(targets[static_cast<size_t>(t)]);
        } else
#endif
        {
            (void)parallel;
            for (size_t r : targets) update_row(r);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

namespace {

std::vector<CliffordPolynomial> dirac_kernel_impl(int d, const Algebra& alg, bool parallel) {
    if (d < 0) throw std::domain_error("dirac_kernel: degree must be >= 0");
    const int n = alg.n();
    const GammaSet gmax = GammaSet(1) << n;

    std::vector<MultiIndex> dom_alphas = degree_multi_indices(n, d);
    auto col_count = dom_alphas.size() * gmax;

    if (d == 0) {
        // constants: every gamma monomial solves the equation
        std::vector<CliffordPolynomial> basis;
        for (GammaSet s = 0; s < gmax; ++s)
            basis.push_back(CliffordPolynomial::monomial(n, MultiIndex(static_cast<size_t>(n), 0), s));
        return basis;
    }

    std::vector<MultiIndex> img_alphas = degree_multi_indices(n, d - 1);
    std::map<PolyKey, size_t> img_index;
    for (size_t i = 0; i < img_alphas.size(); ++i)
        for (GammaSet s = 0; s < gmax; ++s)
            img_index.emplace(PolyKey{img_alphas[i], s}, i * gmax + s);

    detail::DenseMatrix mat;
    mat.rows = img_alphas.size() * gmax;
    mat.cols = col_count;
    mat.a.assign(mat.rows * mat.cols, Scalar(0));

    // Dirac operator gamma^k del_k (the plain operator; same kernel as X)
    WCElement dirac(alg.n());
    for (int i = 1; i <= n; ++i) dirac += alg.mul(alg.g(i), alg.d(i));

    for (size_t ai = 0; ai < dom_alphas.size(); ++ai) {
        for (GammaSet s = 0; s < gmax; ++s) {
            CliffordPolynomial basis_vec = CliffordPolynomial::monomial(n, dom_alphas[ai], s);
            CliffordPolynomial img = act(dirac, basis_vec, alg);
            size_t col = ai * gmax + s;
            for (const auto& [key, c] : img.terms()) mat.at(img_index.at(key), col) = c;
        }
    }

    std::vector<size_t> pivots = detail::rref(mat, parallel);

    std::vector<bool> is_pivot(mat.cols, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<CliffordPolynomial> basis;
    for (size_t free = 0; free < mat.cols; ++free) {
        if (is_pivot[free]) continue;
        CliffordPolynomial v(n);
        v.add_term(dom_alphas[free / gmax], static_cast<GammaSet>(free % gmax), Scalar(1));
        for (size_t r = 0; r < pivots.size(); ++r) {
            const Scalar& entry = mat.at(r, free);
            if (entry.is_zero()) continue;
            size_t pc = pivots[r];
            v.add_term(dom_alphas[pc / gmax], static_cast<GammaSet>(pc % gmax), -entry);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<CliffordPolynomial> dirac_kernel(int d, const Algebra& alg) {
    // Memoized: the verification suites revisit the same bases many times.
    static std::map<std::string, std::vector<CliffordPolynomial>> cache;
    static std::mutex mu;
    std::string key = std::to_string(alg.n()) + "|" + alg.metric().str() + "|" + std::to_string(d);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<CliffordPolynomial> basis = dirac_kernel_impl(d, alg, true);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(basis)).first->second;
}

std::vector<CliffordPolynomial> dirac_kernel_serial(int d, const Algebra& alg) {
    return dirac_kernel_impl(d, alg, false);
}

int span_rank(const std::vector<CliffordPolynomial>& vecs) {
    if (vecs.empty()) return 0;
    std::map<PolyKey, size_t> col_index;
    for (const auto& v : vecs)
        for (const auto& [key, c] : v.terms())
            col_index.emplace(key, col_index.size());
    detail::DenseMatrix mat;
    mat.rows = vecs.size();
    mat.cols = col_index.size();
    mat.a.assign(mat.rows * mat.cols, Scalar(0));
    for (size_t r = 0; r < vecs.size(); ++r)
        for (const auto& [key, c] : vecs[r].terms()) mat.at(r, col_index.at(key)) = c;
    return static_cast<int>(detail::rref(mat, true).size());
}

} // namespace dra
