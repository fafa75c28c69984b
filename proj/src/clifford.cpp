#include "dra/clifford.hpp"

#include <bit>
#include <sstream>

namespace dra {

namespace {

/// Exact inverse by Gauss-Jordan; throws on singular input.
std::vector<Rational> invert(const std::vector<Rational>& m, int n) {
    std::vector<Rational> a = m;
    std::vector<Rational> inv(static_cast<size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = Rational(1);
    auto at = [n](std::vector<Rational>& v, int r, int c) -> Rational& {
        return v[static_cast<size_t>(r) * n + c];
    };
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!at(a, r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("Metric: matrix is singular");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(at(a, pivot, c), at(a, col, c));
                std::swap(at(inv, pivot, c), at(inv, col, c));
            }
        }
        Rational d = at(a, col, col).inv();
        for (int c = 0; c < n; ++c) {
            at(a, col, c) *= d;
            at(inv, col, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || at(a, r, col).is_zero()) continue;
            Rational f = at(a, r, col);
            for (int c = 0; c < n; ++c) {
                at(a, r, c) -= f * at(a, col, c);
                at(inv, r, c) -= f * at(inv, col, c);
            }
        }
    }
    return inv;
}

} // namespace

Metric::Metric(std::vector<std::vector<Rational>> up) {
    n_ = static_cast<int>(up.size());
    if (n_ < 1) throw std::domain_error("Metric: n must be >= 1");
    up_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : up) {
        if (static_cast<int>(row.size()) != n_)
            throw std::domain_error("Metric: matrix is not square");
        for (const auto& e : row) up_.push_back(e);
    }
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (up_[idx(i, j)] != up_[idx(j, i)])
                throw std::domain_error("Metric: matrix is not symmetric");
    down_ = invert(up_, n_);
}

Metric Metric::diagonal(std::vector<Rational> entries) {
    int n = static_cast<int>(entries.size());
    std::vector<std::vector<Rational>> up(static_cast<size_t>(n),
                                          std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)][static_cast<size_t>(i)] = entries[static_cast<size_t>(i)];
    return Metric(std::move(up));
}

Metric Metric::euclidean(int n) {
    return diagonal(std::vector<Rational>(static_cast<size_t>(n), Rational(1)));
}

Metric Metric::lorentzian(int n) {
    std::vector<Rational> d(static_cast<size_t>(n), Rational(1));
    d.back() = Rational(-1);
    return diagonal(std::move(d));
}

Metric Metric::off_diagonal(int n) {
    std::vector<std::vector<Rational>> up(static_cast<size_t>(n),
                                          std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)][static_cast<size_t>(n - 1 - i)] = Rational(1);
    return Metric(std::move(up));
}

Metric Metric::parse(std::string_view text, int n) {
    if (text.empty() || text == "euclidean") return euclidean(n);
    if (text == "lorentzian") return lorentzian(n);
    if (text == "offdiag") return off_diagonal(n);
    constexpr std::string_view kDiag = "diag:";
    if (text.substr(0, kDiag.size()) == kDiag) {
        std::vector<Rational> entries;
        std::string item;
        std::istringstream in{std::string(text.substr(kDiag.size()))};
        while (std::getline(in, item, ',')) entries.push_back(Rational::parse(item));
        if (static_cast<int>(entries.size()) != n)
            throw std::domain_error("Metric: diag entry count does not match n");
        return diagonal(std::move(entries));
    }
    throw std::domain_error("Metric: unrecognized metric spec '" + std::string(text) + "'");
}

std::string Metric::str() const {
    std::string out = "[";
    for (int i = 1; i <= n_; ++i) {
        out += i == 1 ? "[" : ",[";
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out += ",";
            out += up(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

int gamma_count(GammaSet s) { return std::popcount(s); }

std::string gamma_str(GammaSet s) {
    if (s == 0) return "1";
    std::string out;
    for (int i = 0; i < 32; ++i) {
        if (s & (GammaSet(1) << i)) {
            if (!out.empty()) out += "^";
            out += "g" + std::to_string(i + 1);
        }
    }
    return out;
}

Scalar CliffordElement::coeff(GammaSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CliffordElement::add_term(GammaSet s, Scalar coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement out;
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement out = a;
    for (const auto& [s, c] : b.terms_) out.add_term(s, c);
    return out;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
    CliffordElement out = a;
    for (const auto& [s, c] : b.terms_) out.add_term(s, -c);
    return out;
}

CliffordElement CliffordElement::operator*(const Scalar& s) const {
    CliffordElement out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
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
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        if (s == 0) out += cs;
        else if (coeff == Scalar(1)) out += gamma_str(s);
        else if (coeff == Scalar(-1)) out += "-" + gamma_str(s);
        else out += cs + " * " + gamma_str(s);
    }
    return out;
}

CliffordElement clifford_mul_generator(int a, GammaSet s, const Metric& g) {
    GammaSet bit = GammaSet(1) << (a - 1);
    if (s == 0) return CliffordElement::monomial(bit);
    int lowest = std::countr_zero(s) + 1;
    if (a < lowest) return CliffordElement::monomial(s | bit);
    GammaSet rest = s & (s - 1); // clear lowest bit
    if (a == lowest) {
        // gamma^a gamma^a = eta^{aa}
        return CliffordElement::monomial(rest, Scalar(g.up(a, a)));
    }
    // gamma^a gamma^l = 2 eta^{al} - gamma^l gamma^a
    CliffordElement out = CliffordElement::monomial(rest, Scalar(Rational(2) * g.up(a, lowest)));
    CliffordElement tail = clifford_mul_generator(a, rest, g);
    for (const auto& [t, c] : tail.terms()) {
        CliffordElement pushed = clifford_mul_generator(lowest, t, g);
        for (const auto& [u, d] : pushed.terms()) out.add_term(u, -(c * d));
    }
    return out;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b,
                             const Metric& g) {
    CliffordElement out;
    for (const auto& [sa, ca] : a.terms()) {
        // Multiply the monomial gamma^{sa} onto each term of b, rightmost
        // generator of sa first.
        for (const auto& [sb, cb] : b.terms()) {
            CliffordElement acc = CliffordElement::monomial(sb, ca * cb);
            for (int i = 31; i >= 0; --i) {
                if (!(sa & (GammaSet(1) << i))) continue;
                CliffordElement next;
                for (const auto& [t, c] : acc.terms()) {
                    CliffordElement prod = clifford_mul_generator(i + 1, t, g);
                    for (const auto& [u, d] : prod.terms()) next.add_term(u, c * d);
                }
                acc = std::move(next);
            }
            for (const auto& [t, c] : acc.terms()) out.add_term(t, c);
        }
    }
    return out;
}

std::vector<std::pair<int, Rational>> lower_raise(LoweredKind kind, int i, const Metric& g) {
    if (i < 1 || i > g.n()) throw std::domain_error("lower_raise: index out of range");
    std::vector<std::pair<int, Rational>> out;
    for (int j = 1; j <= g.n(); ++j) {
        Rational c = kind == LoweredKind::del_up ? g.up(i, j) : g.down(i, j);
        if (!c.is_zero()) out.emplace_back(j, c);
    }
    return out;
}

} // namespace dra
