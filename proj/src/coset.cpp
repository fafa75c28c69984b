#include "dra/coset.hpp"

#include "dra/polymodule.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace dra {

HPoly projector_kappa(int k) {
    if (k % 2 == 0) return HPoly(Scalar(Rational(-k, 2)));
    return HPoly::var_plus(Scalar(Rational(k + 1, 2)));
}

RatH projector_phi(int k) {
    static std::vector<RatH> cache{RatH(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k) {
        int m = static_cast<int>(cache.size());
        Scalar sign(m % 2 == 0 ? 1 : -1);
        RatH next = cache.back() * RatH(HPoly(sign), projector_kappa(m));
        cache.push_back(std::move(next));
    }
    return cache[static_cast<size_t>(k)];
}

RatH projector_phi_closed(int k) {
    int half = k / 2;
    HPoly den(Scalar(1));
    Rational fact(1);
    for (int j = 2; j <= half; ++j) fact *= Rational(j);
    int top = (k % 2 == 0) ? half - 1 : half;
    for (int m = 0; m <= top; ++m) den = den * HPoly::var_plus(Scalar(m + 1));
    Scalar num(k % 2 == 0 ? Rational(1) / fact : -(Rational(1) / fact));
    return RatH(HPoly(num), den);
}

HPoly projector_psi(int k, int truncation) {
    static std::map<std::pair<int, int>, HPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, truncation});
    if (it != cache.end()) return it->second;
    int j = (truncation + 1) / 2; // ceil(N/2)
    HPoly clear(Scalar(1));
    for (int m = 1; m <= j; ++m) clear = clear * HPoly::var_plus(Scalar(m));
    RatH psi = RatH(clear) * projector_phi(k);
    if (!psi.is_polynomial())
        throw std::logic_error("projector_psi: truncation does not clear the denominator");
    return cache.emplace(std::pair<int, int>{k, truncation}, psi.num()).first->second;
}

HCoeffElement HCoeffElement::from_wc(const WCElement& e) {
    HCoeffElement out(e.n());
    for (const auto& [m, c] : e.terms()) out.terms_.emplace(m, RatH(HPoly(c)));
    return out;
}

HCoeffElement HCoeffElement::from_rath(RatH phi, const Algebra& a) {
    HCoeffElement out(a.n());
    WCMonomial m;
    m.x.assign(static_cast<size_t>(a.n()), 0);
    m.d.assign(static_cast<size_t>(a.n()), 0);
    out.add_term(std::move(m), std::move(phi));
    return out;
}

void HCoeffElement::add_term(WCMonomial m, RatH coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HCoeffElement HCoeffElement::operator-() const {
    HCoeffElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

HCoeffElement& HCoeffElement::operator+=(const HCoeffElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HCoeffElement& HCoeffElement::operator-=(const HCoeffElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

HCoeffElement HCoeffElement::left_mul(const RatH& phi) const {
    HCoeffElement out(n_);
    if (phi.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, phi * c);
    return out;
}

HCoeffElement HCoeffElement::operator*(const Scalar& s) const {
    HCoeffElement out(n_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

int HCoeffElement::parity() const {
    if (terms_.empty()) return -1;
    int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return -2;
    return p;
}

HCoeffElement HCoeffElement::parity_part(int p) const {
    HCoeffElement out(n_);
    for (const auto& [m, c] : terms_)
        if (m.parity() == p) out.terms_.emplace(m, c);
    return out;
}

std::string HCoeffElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        if (cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos)
            cs = "(" + cs + ")";
        if (m.is_identity()) out += cs;
        else if (c == RatH(1)) out += m.str();
        else out += cs + "*" + m.str();
    }
    return out;
}

HCoeffElement hc_mul(const HCoeffElement& a, const HCoeffElement& b, const Algebra& alg) {
    HCoeffElement out(alg.n());
    for (const auto& [ma, ca] : a.terms()) {
        long wt = ma.h_shift_weight();
        for (const auto& [mb, cb] : b.terms()) {
            // phi(H) m  psi(H) m' = phi(H) psi(H + wt(m)) (m m')
            RatH coeff = ca * cb.shifted(wt);
            if (coeff.is_zero()) continue;
            WCElement prod = alg.mul_monomials(ma, mb);
            for (const auto& [m, c] : prod.terms()) out.add_term(m, coeff * c);
        }
    }
    return out;
}

HCoeffElement ad_X_mod(const HCoeffElement& b, const Algebra& alg) {
    HCoeffElement out(alg.n());
    for (const auto& [m, c] : b.terms()) {
        WCElement ad = alg.ad_X(alg.monomial(m));
        if (ad.is_zero()) continue;
        RatH shifted = c.shifted(-1); // X phi(H) = phi(H-1) X
        for (const auto& [mm, cc] : ad.terms()) out.add_term(mm, shifted * cc);
    }
    return out;
}

HCoeffElement ad_rY_mod(const HCoeffElement& a, const Algebra& alg) {
    HCoeffElement out(alg.n());
    for (const auto& [m, c] : a.terms()) {
        WCElement ad = alg.ad_rY(alg.monomial(m));
        for (const auto& [mm, cc] : ad.terms()) out.add_term(mm, c * cc);
    }
    return out;
}

HCoeffElement project_mod_Iprime(const HCoeffElement& b, const Algebra& alg) {
    HCoeffElement out = b;
    HCoeffElement dk = b;
    for (int k = 1;; ++k) {
        dk = ad_X_mod(dk, alg);
        if (dk.is_zero()) break;
        HCoeffElement yk = HCoeffElement::from_wc(alg.pow(alg.osp().Y, static_cast<unsigned>(k)));
        out += hc_mul(yk, dk, alg).left_mul(projector_phi(k));
    }
    return out;
}

CosetRep diamond(const CosetRep& a, const CosetRep& b, const Algebra& alg) {
    HCoeffElement out = hc_mul(a.rep, b.rep, alg);
    HCoeffElement ya = a.rep;
    HCoeffElement xb = b.rep;
    for (int k = 1;; ++k) {
        ya = ad_rY_mod(ya, alg);
        xb = ad_X_mod(xb, alg);
        if (ya.is_zero() || xb.is_zero()) break;
        HCoeffElement mid = HCoeffElement::from_rath(projector_phi(k).shifted(-k), alg);
        out += hc_mul(hc_mul(ya, mid, alg), xb, alg);
    }
    return CosetRep{std::move(out)};
}

CosetEqResult coset_eq(const CosetRep& a, const CosetRep& b, int degree_bound,
                       const Algebra& alg) {
    CosetEqResult result;
    // P(a.v) = P(b.v) iff P((a-b).v) = 0 by linearity of the action and P.
    HCoeffElement diff = a.rep - b.rep;
    bool any_checked = false;
    for (int d = 0; d <= degree_bound; ++d) {
        bool degree_checked = false;
        for (const auto& v : dirac_kernel(d, alg)) {
            try {
                CliffordPolynomial image = act(diff, v, alg);
                degree_checked = true;
                if (image.is_zero()) continue;
                CliffordPolynomial projected = projector_apply(image, alg);
                if (!projected.is_zero()) {
                    result.status = CosetEqResult::Status::not_equal;
                    result.witness = "degree " + std::to_string(d) + ": P((a-b).v) = " +
                                     projected.str() + " on v = " + v.str();
                    return result;
                }
            } catch (const pole_error&) {
                // pole on this component: skip and report
            }
        }
        if (!degree_checked) result.skipped_degrees.push_back(d);
        any_checked = any_checked || degree_checked;
    }
    result.status =
        any_checked ? CosetEqResult::Status::equal : CosetEqResult::Status::indeterminate;
    return result;
}

} // namespace dra
