#include "dra/monogenic.hpp"

#include <algorithm>
#include <numeric>

namespace dra {

namespace {

/// Enumerates the canonical orbit representatives of G_{a,r,s,t} acting on
/// tuples of slot positions, invoking fn(pairs, xs, gammas, dels) with
/// position lists: pairs sorted internally and among themselves, xs and
/// dels sorted, gamma slots ordered.
template <typename Fn>
void enumerate_orbits(int a, int r, int s, int t, Fn&& fn) {
    const int m = 2 * a + r + s + t;
    std::vector<int> all(static_cast<size_t>(m));
    std::iota(all.begin(), all.end(), 0);

    std::vector<int> dels, gammas, xs;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> rest1;

    auto choose_pairs = [&](auto&& self, std::vector<int> pool) -> void {
        if (pool.empty()) {
            fn(pairs, xs, gammas, dels);
            return;
        }
        // matchings: smallest element pairs with each other element
        int first = pool.front();
        for (size_t j = 1; j < pool.size(); ++j) {
            std::vector<int> next;
            for (size_t k = 1; k < pool.size(); ++k)
                if (k != j) next.push_back(pool[k]);
            pairs.emplace_back(first, pool[j]);
            self(self, std::move(next));
            pairs.pop_back();
        }
    };

    auto choose_gamma_seq = [&](auto&& self, const std::vector<int>& pool,
                                std::vector<bool>& used) -> void {
        if (static_cast<int>(gammas.size()) == s) {
            xs.clear();
            for (size_t k = 0; k < pool.size(); ++k)
                if (!used[k]) xs.push_back(pool[k]);
            if (static_cast<int>(xs.size()) != r + 2 * a) return; // unreachable
            // split: first choose the x-subset among the remainder
            std::vector<int> rem = xs;
            std::vector<int> xsel(static_cast<size_t>(r));
            std::vector<bool> mark(rem.size(), false);
            auto choose_x = [&](auto&& self2, size_t start, int chosen) -> void {
                if (chosen == r) {
                    xs.clear();
                    std::vector<int> pair_pool;
                    for (size_t k = 0; k < rem.size(); ++k)
                        (mark[k] ? xs : pair_pool).push_back(rem[k]);
                    choose_pairs(choose_pairs, std::move(pair_pool));
                    return;
                }
                for (size_t k = start; k + static_cast<size_t>(r - chosen) <= rem.size(); ++k) {
                    mark[k] = true;
                    self2(self2, k + 1, chosen + 1);
                    mark[k] = false;
                }
            };
            choose_x(choose_x, 0, 0);
            return;
        }
        for (size_t k = 0; k < pool.size(); ++k) {
            if (used[k]) continue;
            used[k] = true;
            gammas.push_back(pool[k]);
            self(self, pool, used);
            gammas.pop_back();
            used[k] = false;
        }
    };

    auto choose_dels = [&](auto&& self, size_t start, int chosen) -> void {
        if (chosen == t) {
            rest1.clear();
            std::vector<bool> in_del(all.size(), false);
            for (int dpos : dels) in_del[static_cast<size_t>(dpos)] = true;
            for (int p : all)
                if (!in_del[static_cast<size_t>(p)]) rest1.push_back(p);
            std::vector<bool> used(rest1.size(), false);
            choose_gamma_seq(choose_gamma_seq, rest1, used);
            return;
        }
        for (size_t k = start; k + static_cast<size_t>(t - chosen) <= all.size(); ++k) {
            dels.push_back(all[k]);
            self(self, k + 1, chosen + 1);
            dels.pop_back();
        }
    };

    choose_dels(choose_dels, 0, 0);
}

/// One factor layout (eta-pairs, x's, gammas, dels) over concrete indices.
/// The product x^a gamma-word del^-word has no Weyl contractions (x's left
/// of dels, gammas commute with both), so the term is assembled directly.
WCElement orbit_term(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& xs,
                     const std::vector<int>& gammas, const std::vector<int>& dels,
                     const std::vector<int>& idx, const Algebra& alg) {
    const Metric& metric = alg.metric();
    Scalar coeff(1);
    for (const auto& [p, q] : pairs) {
        coeff *= Scalar(metric.up(idx[static_cast<size_t>(p)], idx[static_cast<size_t>(q)]));
        if (coeff.is_zero()) return alg.zero();
    }
    MultiIndex xdeg(static_cast<size_t>(alg.n()), 0);
    for (int p : xs) ++xdeg[static_cast<size_t>(idx[static_cast<size_t>(p)] - 1)];

    CliffordElement gprod(Scalar(1));
    for (int p : gammas)
        gprod = clifford_mul(gprod, CliffordElement::generator(idx[static_cast<size_t>(p)]), metric);
    if (gprod.is_zero()) return alg.zero();

    // del^{i} = eta^{ik} del_k, expanded over all del slots
    std::vector<std::pair<MultiIndex, Scalar>> dterms{{MultiIndex(static_cast<size_t>(alg.n()), 0), coeff}};
    for (int p : dels) {
        int i = idx[static_cast<size_t>(p)];
        std::vector<std::pair<MultiIndex, Scalar>> next;
        for (const auto& [beta, c] : dterms) {
            for (int k = 1; k <= alg.n(); ++k) {
                const Rational& eta = metric.up(i, k);
                if (eta.is_zero()) continue;
                MultiIndex nb = beta;
                ++nb[static_cast<size_t>(k - 1)];
                next.emplace_back(std::move(nb), c * Scalar(eta));
            }
        }
        dterms = std::move(next);
    }

    WCElement out(alg.n());
    for (const auto& [beta, c] : dterms) {
        for (const auto& [s, cg] : gprod.terms()) {
            WCMonomial m;
            m.x = xdeg;
            m.d = beta;
            m.gammas = s;
            out.add_term(std::move(m), c * cg);
        }
    }
    return out;
}

void check_arity(const BracketSpec& spec, const std::vector<int>& indices) {
    if (spec.arity() != static_cast<int>(indices.size()))
        throw std::invalid_argument("bracket: 2a + r + s + t must match the index count");
}

} // namespace

WCElement bracket(const BracketSpec& spec, const std::vector<int>& indices, const Algebra& alg) {
    if (spec.x_count < 0) return alg.zero();
    check_arity(spec, indices);
    WCElement out = alg.zero();
    enumerate_orbits(spec.eta_pairs, spec.x_count, spec.gamma_count, spec.del_count,
                     [&](const auto& pairs, const auto& xs, const auto& gs, const auto& ds) {
                         out += orbit_term(pairs, xs, gs, ds, indices, alg);
                     });
    return out;
}

WCElement bracket_symmetrized_oracle(const BracketSpec& spec, const std::vector<int>& indices,
                                     const Algebra& alg) {
    if (spec.x_count < 0) return alg.zero();
    check_arity(spec, indices);
    const int m = spec.arity();
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);

    // |G| = 2^a a! r! t!
    Rational order(1);
    for (int j = 1; j <= spec.eta_pairs; ++j) order *= Rational(2 * j);
    for (int j = 2; j <= spec.x_count; ++j) order *= Rational(j);
    for (int j = 2; j <= spec.del_count; ++j) order *= Rational(j);

    WCElement out = alg.zero();
    do {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 0; j < spec.eta_pairs; ++j)
            pairs.emplace_back(perm[static_cast<size_t>(2 * j)], perm[static_cast<size_t>(2 * j + 1)]);
        std::vector<int> xs(perm.begin() + 2 * spec.eta_pairs,
                            perm.begin() + 2 * spec.eta_pairs + spec.x_count);
        std::vector<int> gs(perm.begin() + 2 * spec.eta_pairs + spec.x_count,
                            perm.begin() + 2 * spec.eta_pairs + spec.x_count + spec.gamma_count);
        std::vector<int> ds(perm.end() - spec.del_count, perm.end());
        out += orbit_term(pairs, xs, gs, ds, indices, alg);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out * Scalar(Rational(1) / order);
}

std::pair<Scalar, BracketSpec> bracket_gamma_reduce(const BracketSpec& spec) {
    if (spec.gamma_count < 2)
        throw std::invalid_argument("bracket_gamma_reduce: needs at least two gamma slots");
    BracketSpec reduced = spec;
    reduced.eta_pairs += 1;
    reduced.gamma_count -= 2;
    return {Scalar(Rational(2 * (spec.eta_pairs + 1))), reduced};
}

WCElement ad_X_bracket(const BracketSpec& spec, const std::vector<int>& indices,
                       const Algebra& alg) {
    check_arity(spec, indices);
    const Scalar c = Scalar::c();
    if (spec.gamma_count == 0) {
        BracketSpec out{spec.eta_pairs, spec.x_count - 1, 1, spec.del_count};
        return bracket(out, indices, alg) * c;
    }
    if (spec.gamma_count == 1) {
        BracketSpec first{spec.eta_pairs + 1, spec.x_count - 1, 0, spec.del_count};
        BracketSpec second{spec.eta_pairs, spec.x_count, 0, spec.del_count + 1};
        Scalar c1 = Scalar(Rational(2 * (spec.eta_pairs + 1))) * c;
        Scalar c2 = Scalar(Rational(2 * (spec.del_count + 1))) * c;
        return bracket(first, indices, alg) * c1 + bracket(second, indices, alg) * c2;
    }
    throw std::invalid_argument("ad_X_bracket: gamma_count must be 0 or 1");
}

WCElement ad_X_power_xm(int m, int k, int r, const std::vector<int>& indices, const Algebra& alg) {
    if (r != 0 && r != 1) throw std::invalid_argument("ad_X_power_xm: r must be 0 or 1");
    if (k < 0) throw std::invalid_argument("ad_X_power_xm: k must be >= 0");
    if (static_cast<int>(indices.size()) != m)
        throw std::invalid_argument("ad_X_power_xm: index count must be m");
    Scalar pref(Rational(1));
    for (int j = 2; j <= k; ++j) pref *= Scalar(j);
    if (k % 2 == 1) pref = -pref;
    if (r == 1) pref *= Scalar::c();
    WCElement out = alg.zero();
    for (int t = 0; t <= k; ++t) {
        BracketSpec spec{t, m - k - t - r, r, k - t};
        out += bracket(spec, indices, alg);
    }
    return out * pref;
}

HatOperator make_hat(HatOperator::Kind kind, int i, const Algebra& alg) {
    if (i < 1 || i > alg.n()) throw std::invalid_argument("make_hat: index out of range");
    switch (kind) {
    case HatOperator::Kind::hat_del:
        return HatOperator{kind, i, HCoeffElement::from_wc(alg.d(i))};
    case HatOperator::Kind::hat_x: {
        HCoeffElement p = project_mod_Iprime(HCoeffElement::from_wc(alg.x(i)), alg);
        return HatOperator{kind, i, p.left_mul(RatH(HPoly::var_plus(Scalar(1))))};
    }
    case HatOperator::Kind::hat_gamma: {
        HCoeffElement p = project_mod_Iprime(HCoeffElement::from_wc(alg.g(i)), alg);
        return HatOperator{kind, i, p.left_mul(RatH(HPoly::var_plus(Scalar(1))))};
    }
    case HatOperator::Kind::tilde_gamma: {
        if (alg.n() == 2)
            throw std::domain_error("tilde_gamma is undefined for n = 2 (1 - n/2 = 0)");
        HatOperator hat = make_hat(HatOperator::Kind::hat_gamma, i, alg);
        Scalar norm = Scalar(1) - Scalar(Rational(alg.n(), 2));
        return HatOperator{kind, i, hat.realized * norm.inv()};
    }
    }
    throw std::logic_error("make_hat: unknown kind");
}

CliffordPolynomial hat_apply(const HatOperator& op, const CliffordPolynomial& v,
                             const Algebra& alg) {
    if (!is_solution(v, alg))
        throw std::invalid_argument("hat_apply: input is not annihilated by the Dirac operator");
    return act(op.realized, v, alg);
}

CliffordPolynomial tilde_apply(const CliffordElement& p, const CliffordPolynomial& v,
                               const Algebra& alg) {
    if (alg.n() == 2) throw std::domain_error("tilde operators are undefined for n = 2");
    CliffordPolynomial out(alg.n());
    for (const auto& [s, c] : p.terms()) {
        CliffordPolynomial w = v;
        // gamma word of s applied tilde-wise, rightmost factor first
        for (int i = 31; i >= 0; --i) {
            if (!(s & (GammaSet(1) << i))) continue;
            HatOperator t = make_hat(HatOperator::Kind::tilde_gamma, i + 1, alg);
            w = hat_apply(t, w, alg);
        }
        out += w * c;
    }
    return out;
}

HCoeffElement hat_product_closed_form(const std::vector<int>& indices, const Algebra& alg) {
    const int m = static_cast<int>(indices.size());
    const int n = alg.n();

    // F~ = x_k x^k and Y~ = x_k gamma^k
    WCElement f_tilde(alg.n()), y_tilde(alg.n());
    for (int i = 1; i <= n; ++i) {
        f_tilde += alg.mul(alg.x_down(i), alg.x(i));
        y_tilde += alg.mul(alg.x_down(i), alg.g(i));
    }

    // leading term (H+1)...(H+m) x^{i_1}...x^{i_m}
    WCMonomial lead;
    lead.x.assign(static_cast<size_t>(n), 0);
    lead.d.assign(static_cast<size_t>(n), 0);
    for (int i : indices) ++lead.x[static_cast<size_t>(i - 1)];
    HPoly hprod(Scalar(1));
    for (int k = 1; k <= m; ++k) hprod = hprod * HPoly::var_plus(Scalar(k));
    HCoeffElement out(alg.n());
    out.add_term(std::move(lead), RatH(hprod));

    Rational two_pow(1);
    for (int q = 1; q <= m; ++q) {
        two_pow *= Rational(2);
        HPoly coeff(Scalar(Rational(1) / two_pow));
        for (int k = q + 1; k <= m; ++k) coeff = coeff * HPoly::var_plus(Scalar(k));

        WCElement s0 = alg.zero();
        for (int t = 0; t <= q; ++t)
            s0 += bracket(BracketSpec{t, m - q - t, 0, q - t}, indices, alg);
        WCElement s1 = alg.zero();
        for (int t = 0; t <= q - 1; ++t)
            s1 += bracket(BracketSpec{t, m - q - t, 1, q - 1 - t}, indices, alg);

        WCElement f_pow = alg.pow(f_tilde, static_cast<unsigned>(q - 1));
        WCElement inner = alg.mul(y_tilde, s1) + alg.mul(f_tilde, s0);
        WCElement term = alg.mul(f_pow, inner);
        HCoeffElement hterm = HCoeffElement::from_wc(term).left_mul(RatH(coeff));
        out += hterm;
    }
    return out;
}

CliffordPolynomial hat_x_compose(const std::vector<int>& indices, const CliffordPolynomial& v,
                                 const Algebra& alg) {
    CliffordPolynomial out = v;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
        out = hat_apply(make_hat(HatOperator::Kind::hat_x, *it, alg), out, alg);
    return out;
}

namespace {

CliffordPolynomial to_poly(const WCElement& e, const Algebra& alg) {
    return act(e, CliffordPolynomial::one(alg.n()), alg);
}

} // namespace

SolutionParts solution_closed_form_parts(const std::vector<int>& indices, const Algebra& alg) {
    const int m = static_cast<int>(indices.size());
    const int n = alg.n();
    const Rational half_n(n, 2);

    SolutionParts parts{CliffordPolynomial(n), CliffordPolynomial(n), CliffordPolynomial(n)};

    // (-1)^m prod_{k=1}^{m} (n/2 + m - k) x^{i_1}...x^{i_m}
    MultiIndex alpha(static_cast<size_t>(n), 0);
    for (int i : indices) ++alpha[static_cast<size_t>(i - 1)];
    Rational lead(1);
    for (int k = 1; k <= m; ++k) lead *= half_n + Rational(m - k);
    if (m % 2 == 1) lead = -lead;
    parts.leading = CliffordPolynomial::monomial(n, std::move(alpha), 0, Scalar(lead));

    CliffordPolynomial f_tilde(n), y_tilde(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rational eta = alg.metric().down(i, j);
            if (eta.is_zero()) continue;
            MultiIndex two(static_cast<size_t>(n), 0);
            ++two[static_cast<size_t>(i - 1)];
            ++two[static_cast<size_t>(j - 1)];
            f_tilde.add_term(std::move(two), 0, Scalar(eta));
            MultiIndex one_idx(static_cast<size_t>(n), 0);
            ++one_idx[static_cast<size_t>(j - 1)];
            y_tilde.add_term(std::move(one_idx), GammaSet(1) << (i - 1), Scalar(eta));
        }

    // Both correction sums carry prod_{k=q+1}^{m} (-n/2 + k - m) / 2^q:
    // every H-factor of the product formula ends up evaluated on the full
    // degree-m term, eigenvalue -(m + n/2).
    Rational two_pow(1);
    for (int q = 1; q <= (m + 1) / 2; ++q) {
        two_pow *= Rational(2);
        Rational cq = Rational(1) / two_pow;
        for (int k = q + 1; k <= m; ++k) cq *= -half_n + Rational(k - m);
        if (cq.is_zero()) continue;
        {
            WCElement br = bracket(BracketSpec{q - 1, m - 2 * q + 1, 1, 0}, indices, alg);
            CliffordPolynomial term = to_poly(br, alg);
            term = v_mul(y_tilde, term, alg);
            for (int rep = 0; rep < q - 1; ++rep) term = v_mul(f_tilde, term, alg);
            parts.gamma_sum += term * Scalar(cq);
        }
        if (q <= m / 2) {
            WCElement br = bracket(BracketSpec{q, m - 2 * q, 0, 0}, indices, alg);
            CliffordPolynomial term = to_poly(br, alg);
            for (int rep = 0; rep < q; ++rep) term = v_mul(f_tilde, term, alg);
            parts.eta_sum += term * Scalar(cq);
        }
    }
    return parts;
}

CliffordPolynomial solution_from_indices(const std::vector<int>& indices,
                                         const CliffordElement& p, const Algebra& alg) {
    for (int i : indices)
        if (i < 1 || i > alg.n())
            throw std::invalid_argument("solution_from_indices: index out of range");
    SolutionParts parts = solution_closed_form_parts(indices, alg);
    CliffordPolynomial sol = parts.leading + parts.gamma_sum + parts.eta_sum;
    return right_mul(sol, p, alg);
}

Reconstruction reconstruct(const CliffordPolynomial& phi, const Algebra& alg) {
    if (alg.n() == 2) throw std::domain_error("reconstruct requires n != 2");
    if (!is_solution(phi, alg))
        throw std::invalid_argument("reconstruct: input is not annihilated by the Dirac operator");
    Reconstruction rec;
    const Rational half_n(alg.n(), 2);
    for (int d : phi.occurring_degrees()) {
        CliffordPolynomial comp = phi.component(d);
        // Per-degree normalization (-1)^d prod_{k=1}^{d} (n/2 + d - k),
        // never zero for n >= 1.
        Rational norm(1);
        for (int k = 1; k <= d; ++k) norm *= half_n + Rational(d - k);
        if (d % 2 == 1) norm = -norm;
        Scalar inv_norm = Scalar(norm).inv();

        // group terms by x-multi-index
        std::map<MultiIndex, CliffordElement> by_alpha;
        for (const auto& [key, c] : comp.terms()) by_alpha[key.first].add_term(key.second, c);
        for (auto& [alpha, p] : by_alpha) {
            Reconstruction::Term term;
            term.coeff = inv_norm;
            for (size_t i = 0; i < alpha.size(); ++i)
                for (std::uint32_t r = 0; r < alpha[i]; ++r)
                    term.x_indices.push_back(static_cast<int>(i + 1));
            term.clifford = p;
            rec.terms.push_back(std::move(term));
        }
    }
    return rec;
}

CliffordPolynomial apply_reconstruction(const Reconstruction& rec, const Algebra& alg) {
    CliffordPolynomial out(alg.n());
    for (const auto& term : rec.terms) {
        CliffordPolynomial w = tilde_apply(term.clifford, CliffordPolynomial::one(alg.n()), alg);
        w = hat_x_compose(term.x_indices, w, alg);
        out += w * term.coeff;
    }
    return out;
}

CliffordElement extract_clifford_top(const CliffordPolynomial& phi, const Algebra& alg) {
    if (phi.is_zero()) throw std::invalid_argument("extract_clifford_top: zero input");
    const int d = phi.degree();
    // lexicographically greatest multi-index among maximal total degree
    const MultiIndex* beta = nullptr;
    for (const auto& [key, c] : phi.terms()) {
        if (static_cast<int>(multi_total(key.first)) != d) continue;
        if (!beta || *beta < key.first) beta = &key.first;
    }
    MultiIndex b = *beta;
    CliffordPolynomial w = phi;
    Rational fact(1);
    for (size_t i = 0; i < b.size(); ++i) {
        for (std::uint32_t r = 0; r < b[i]; ++r) {
            w = act(alg.d(static_cast<int>(i + 1)), w, alg);
            fact *= Rational(static_cast<long>(r) + 1);
        }
    }
    CliffordElement out = w.constant_term() * Scalar(fact).inv();
    return out;
}

} // namespace dra
