#include "dra/weyl_clifford.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace dra {

std::uint32_t multi_total(const MultiIndex& m) {
    std::uint32_t t = 0;
    for (auto v : m) t += v;
    return t;
}

namespace {

std::string multi_str(const MultiIndex& m, char sym) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += sym + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

/// k! C(a,k) C(b,k) as an exact integer.
BigInt contraction_factor(std::uint32_t a, std::uint32_t b, std::uint32_t k) {
    BigInt f = 1;
    for (std::uint32_t j = 0; j < k; ++j) {
        f *= BigInt(a - j);
        f *= BigInt(b - j);
    }
    for (std::uint32_t j = 2; j <= k; ++j) f /= BigInt(j);
    return f;
}

} // namespace

std::string WCMonomial::str() const {
    std::string out = multi_str(x, 'x');
    std::string ds = multi_str(d, 'd');
    if (!ds.empty()) out += (out.empty() ? "" : "*") + ds;
    for (int i = 0; i < 32; ++i) {
        if (gammas & (GammaSet(1) << i)) {
            if (!out.empty()) out += "*";
            out += "g" + std::to_string(i + 1);
        }
    }
    return out.empty() ? "1" : out;
}

Scalar WCElement::coeff(const WCMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void WCElement::add_term(WCMonomial m, Scalar coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WCElement WCElement::operator-() const {
    WCElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

WCElement& WCElement::operator+=(const WCElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WCElement& WCElement::operator-=(const WCElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WCElement WCElement::operator*(const Scalar& s) const {
    WCElement out(n_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

int WCElement::parity() const {
    if (terms_.empty()) return -1;
    int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return -2;
    return p;
}

WCElement WCElement::parity_part(int p) const {
    WCElement out(n_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == p) out.terms_.emplace(m, c);
    return out;
}

std::string WCElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
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
        if (m.is_identity()) out += cs;
        else if (coeff == Scalar(1)) out += m.str();
        else if (coeff == Scalar(-1)) out += "-" + m.str();
        else out += cs + "*" + m.str();
    }
    return out;
}

Algebra::Algebra(Metric metric) : metric_(std::move(metric)) {
    const int nn = n();
    const Scalar c = Scalar::c();

    WCElement X(nn), Y(nn), H(nn), E(nn), F(nn);
    for (int i = 1; i <= nn; ++i) {
        X += mul(g(i), d(i)) * c;
        Y += mul(g(i), x_down(i)) * c;
        H += (mul(d(i), x(i)) + mul(x(i), d(i))) * Scalar(Rational(-1, 2));
        E += mul(d_up(i), d(i)) * Scalar(Rational(-1, 2));
        F += mul(x(i), x_down(i)) * Scalar(Rational(1, 2));
    }
    osp_ = OspGenerators{std::move(X), std::move(Y), std::move(H), std::move(E), std::move(F)};
}

WCElement Algebra::scalar(Scalar s) const {
    WCElement e(n());
    WCMonomial m;
    m.x.assign(static_cast<size_t>(n()), 0);
    m.d.assign(static_cast<size_t>(n()), 0);
    e.add_term(std::move(m), std::move(s));
    return e;
}

WCElement Algebra::monomial(WCMonomial m, Scalar coeff) const {
    WCElement e(n());
    e.add_term(std::move(m), std::move(coeff));
    return e;
}

WCElement Algebra::x(int i) const {
    WCMonomial m;
    m.x.assign(static_cast<size_t>(n()), 0);
    m.d.assign(static_cast<size_t>(n()), 0);
    m.x[static_cast<size_t>(i - 1)] = 1;
    return monomial(std::move(m));
}

WCElement Algebra::d(int i) const {
    WCMonomial m;
    m.x.assign(static_cast<size_t>(n()), 0);
    m.d.assign(static_cast<size_t>(n()), 0);
    m.d[static_cast<size_t>(i - 1)] = 1;
    return monomial(std::move(m));
}

WCElement Algebra::g(int i) const {
    WCMonomial m;
    m.x.assign(static_cast<size_t>(n()), 0);
    m.d.assign(static_cast<size_t>(n()), 0);
    m.gammas = GammaSet(1) << (i - 1);
    return monomial(std::move(m));
}

WCElement Algebra::x_down(int i) const {
    WCElement e(n());
    for (const auto& [j, c] : lower_raise(LoweredKind::x_down, i, metric_)) e += x(j) * Scalar(c);
    return e;
}

WCElement Algebra::d_up(int i) const {
    WCElement e(n());
    for (const auto& [j, c] : lower_raise(LoweredKind::del_up, i, metric_)) e += d(j) * Scalar(c);
    return e;
}

WCElement Algebra::g_down(int i) const {
    WCElement e(n());
    for (const auto& [j, c] : lower_raise(LoweredKind::gamma_down, i, metric_)) e += g(j) * Scalar(c);
    return e;
}

void Algebra::check_context(const WCElement& e) const {
    if (e.n() != 0 && e.n() != n())
        throw context_mismatch("WCElement belongs to a different algebra context");
}

WCElement Algebra::mul_monomials(const WCMonomial& a, const WCMonomial& b) const {
    const size_t nn = static_cast<size_t>(n());
    // gamma^{Sa} commutes past x^{alpha_b} del^{beta_b}; only the Clifford
    // part re-expands, and only the Weyl contraction mixes degrees:
    // del^k x^m = sum_j j! C(k,j) C(m,j) x^{m-j} del^{k-j}.
    CliffordElement gprod = clifford_mul(CliffordElement::monomial(a.gammas),
                                         CliffordElement::monomial(b.gammas), metric_);
    WCElement out(n());
    if (gprod.is_zero()) return out;

    MultiIndex kmax(nn, 0);
    for (size_t i = 0; i < nn; ++i) kmax[i] = std::min(a.d[i], b.x[i]);

    MultiIndex k(nn, 0);
    while (true) {
        BigInt factor = 1;
        for (size_t i = 0; i < nn; ++i)
            if (k[i] > 0) factor *= contraction_factor(a.d[i], b.x[i], k[i]);
        WCMonomial m;
        m.x.resize(nn);
        m.d.resize(nn);
        for (size_t i = 0; i < nn; ++i) {
            m.x[i] = a.x[i] + b.x[i] - k[i];
            m.d[i] = a.d[i] + b.d[i] - k[i];
        }
        Scalar base{Rational(factor)};
        for (const auto& [s, c] : gprod.terms()) {
            WCMonomial t = m;
            t.gammas = s;
            out.add_term(std::move(t), base * c);
        }
        // odometer over k <= kmax
        size_t pos = 0;
        while (pos < nn && k[pos] == kmax[pos]) {
            k[pos] = 0;
            ++pos;
        }
        if (pos == nn) break;
        ++k[pos];
    }
    return out;
}

WCElement Algebra::mul(const WCElement& a, const WCElement& b) const {
    check_context(a);
    check_context(b);
    std::vector<const std::pair<const WCMonomial, Scalar>*> ta, tb;
    ta.reserve(a.terms().size());
    tb.reserve(b.terms().size());
    for (const auto& t : a.terms()) ta.push_back(&t);
    for (const auto& t : b.terms()) tb.push_back(&t);
    const size_t pairs = ta.size() * tb.size();

    WCElement out(n());
#ifdef _OPENMP
    if (pairs >= 256 && omp_get_max_threads() > 1) {
        const int threads = omp_get_max_threads();
        std::vector<WCElement> partial(static_cast<size_t>(threads), WCElement(n()));
#pragma omp parallel for schedule(dynamic, 16)
        for (size_t idx = 0; idx < pairs; ++idx) {
            const auto& pa = *ta[idx / tb.size()];
            const auto& pb = *tb[idx % tb.size()];
            WCElement prod = mul_monomials(pa.first, pb.first) * (pa.second * pb.second);
            partial[static_cast<size_t>(omp_get_thread_num())] += prod;
        }
        for (auto& p : partial) out += p;
        return out;
    }
#endif
    for (const auto* pa : ta)
        for (const auto* pb : tb)
            out += mul_monomials(pa->first, pb->first) * (pa->second * pb->second);
    return out;
}

namespace {

// Atoms for the rewriting reference: kind 0 = x, 1 = del, 2 = gamma.
struct Atom {
    std::uint8_t kind;
    std::uint8_t idx; // 1-based
};

void append_atoms(std::vector<Atom>& w, const WCMonomial& m) {
    for (size_t i = 0; i < m.x.size(); ++i)
        for (std::uint32_t r = 0; r < m.x[i]; ++r)
            w.push_back({0, static_cast<std::uint8_t>(i + 1)});
    for (size_t i = 0; i < m.d.size(); ++i)
        for (std::uint32_t r = 0; r < m.d[i]; ++r)
            w.push_back({1, static_cast<std::uint8_t>(i + 1)});
    for (int i = 0; i < 32; ++i)
        if (m.gammas & (GammaSet(1) << i))
            w.push_back({2, static_cast<std::uint8_t>(i + 1)});
}

} // namespace

WCElement Algebra::mul_reference(const WCElement& a, const WCElement& b) const {
    check_context(a);
    check_context(b);
    WCElement out(n());
    struct Item {
        Scalar coeff;
        std::vector<Atom> word;
    };
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Item> stack;
            {
                std::vector<Atom> w;
                append_atoms(w, ma);
                append_atoms(w, mb);
                stack.push_back({ca * cb, std::move(w)});
            }
            while (!stack.empty()) {
                Item it = std::move(stack.back());
                stack.pop_back();
                // find first out-of-order adjacent pair
                size_t pos = it.word.size();
                for (size_t i = 0; i + 1 < it.word.size(); ++i) {
                    const Atom& p = it.word[i];
                    const Atom& q = it.word[i + 1];
                    bool bad = p.kind > q.kind ||
                               (p.kind == q.kind && p.idx > q.idx) ||
                               (p.kind == 2 && q.kind == 2 && p.idx == q.idx);
                    if (bad) {
                        pos = i;
                        break;
                    }
                }
                if (pos == it.word.size()) {
                    WCMonomial m;
                    m.x.assign(static_cast<size_t>(n()), 0);
                    m.d.assign(static_cast<size_t>(n()), 0);
                    for (const Atom& at : it.word) {
                        if (at.kind == 0) ++m.x[static_cast<size_t>(at.idx - 1)];
                        else if (at.kind == 1) ++m.d[static_cast<size_t>(at.idx - 1)];
                        else m.gammas |= GammaSet(1) << (at.idx - 1);
                    }
                    out.add_term(std::move(m), it.coeff);
                    continue;
                }
                const Atom p = it.word[pos];
                const Atom q = it.word[pos + 1];
                if (p.kind == 1 && q.kind == 0) {
                    // del_i x^j = x^j del_i + delta_i^j
                    if (p.idx == q.idx) {
                        Item contracted;
                        contracted.coeff = it.coeff;
                        contracted.word = it.word;
                        contracted.word.erase(contracted.word.begin() + static_cast<long>(pos),
                                              contracted.word.begin() + static_cast<long>(pos) + 2);
                        stack.push_back(std::move(contracted));
                    }
                    std::swap(it.word[pos], it.word[pos + 1]);
                    stack.push_back(std::move(it));
                } else if (p.kind == 2 && q.kind == 2) {
                    // gamma^i gamma^j = 2 eta^{ij} - gamma^j gamma^i;
                    // equal indices close to eta^{ii}.
                    Item contracted;
                    contracted.word = it.word;
                    contracted.word.erase(contracted.word.begin() + static_cast<long>(pos),
                                          contracted.word.begin() + static_cast<long>(pos) + 2);
                    if (p.idx == q.idx) {
                        contracted.coeff = it.coeff * Scalar(metric_.up(p.idx, q.idx));
                        stack.push_back(std::move(contracted));
                    } else {
                        contracted.coeff = it.coeff * Scalar(Rational(2) * metric_.up(p.idx, q.idx));
                        if (!contracted.coeff.is_zero()) stack.push_back(std::move(contracted));
                        std::swap(it.word[pos], it.word[pos + 1]);
                        it.coeff = -it.coeff;
                        stack.push_back(std::move(it));
                    }
                } else {
                    // commuting swap: x/x, d/d, gamma past x or del
                    std::swap(it.word[pos], it.word[pos + 1]);
                    stack.push_back(std::move(it));
                }
            }
        }
    }
    return out;
}

WCElement Algebra::super_commutator(const WCElement& a, const WCElement& b) const {
    WCElement out(n());
    for (int pa = 0; pa <= 1; ++pa) {
        WCElement ap = a.parity_part(pa);
        if (ap.is_zero()) continue;
        for (int pb = 0; pb <= 1; ++pb) {
            WCElement bp = b.parity_part(pb);
            if (bp.is_zero()) continue;
            WCElement ab = mul(ap, bp);
            WCElement ba = mul(bp, ap);
            out += (pa & pb) ? ab + ba : ab - ba;
        }
    }
    return out;
}

WCElement Algebra::pow(const WCElement& a, unsigned k) const {
    WCElement out = one();
    for (unsigned i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

} // namespace dra
