#include "dra/verify.hpp"

#include "dra/monogenic.hpp"
#include "dra/polymodule.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <functional>
#include <random>
#include <sstream>

namespace dra::verify {

int SuiteReport::failures() const {
    int k = 0;
    for (const auto& e : entries) k += e.status == "fail";
    return k;
}

int SuiteReport::skips() const {
    int k = 0;
    for (const auto& e : entries) k += e.status == "skipped";
    return k;
}

Json SuiteReport::to_json() const {
    Json items = Json::array();
    for (const auto& e : entries) {
        Json item{{"relation", e.relation}, {"indices", e.indices}, {"status", e.status}};
        item["witness"] = e.witness.empty() ? Json(nullptr) : Json(e.witness);
        items.push_back(std::move(item));
    }
    return Json{{"suite", suite},
                {"params", params},
                {"checks", static_cast<int>(entries.size())},
                {"failures", failures()},
                {"skipped", skips()},
                {"passed", passed()},
                {"report", items}};
}

std::string SuiteReport::summary() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        if (e.status == "pass") continue;
        out << "  [" << e.status << "] " << e.relation;
        if (!e.indices.empty()) {
            out << " (";
            for (size_t i = 0; i < e.indices.size(); ++i)
                out << (i ? "," : "") << e.indices[i];
            out << ")";
        }
        if (!e.witness.empty()) out << ": " << e.witness;
        out << "\n";
    }
    out << suite << ": " << entries.size() << " checks, " << failures() << " failures, "
        << skips() << " skipped";
    return out.str();
}

namespace {

CheckEntry check_eq(const std::string& name, std::vector<int> idx, const WCElement& got,
                    const WCElement& want) {
    if (got == want) return CheckEntry::pass(name, std::move(idx));
    return CheckEntry::fail(name, std::move(idx),
                            "got " + got.str() + ", want " + want.str());
}

CheckEntry check_eq(const std::string& name, std::vector<int> idx, const HCoeffElement& got,
                    const HCoeffElement& want) {
    if (got == want) return CheckEntry::pass(name, std::move(idx));
    return CheckEntry::fail(name, std::move(idx),
                            "got " + got.str() + ", want " + want.str());
}

Json algebra_params(const Algebra& alg) {
    return Json{{"n", alg.n()}, {"metric", alg.metric().str()}};
}

/// Runs bodies (index -> CheckEntry list) in parallel, keeping entry order.
void run_tasks(size_t count, const std::function<std::vector<CheckEntry>(size_t)>& body,
               std::vector<CheckEntry>& sink) {
    std::vector<std::vector<CheckEntry>> slots(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < count; ++i) {
        try {
            slots[i] = body(i);
        } catch (const std::exception& ex) {
            slots[i] = {CheckEntry::fail("task " + std::to_string(i), {}, ex.what())};
        }
    }
    for (auto& s : slots)
        for (auto& e : s) sink.push_back(std::move(e));
}

/// All tuples in [n]^m, odometer order.
std::vector<std::vector<int>> all_tuples(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(m), 1);
    while (true) {
        out.push_back(cur);
        int pos = m - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n) {
            cur[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
    }
    if (m == 0) out.assign(1, {});
    return out;
}

/// All sorted (non-decreasing) tuples in [n]^m.
std::vector<std::vector<int>> sorted_tuples(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<BracketSpec> specs_of_arity(int m) {
    std::vector<BracketSpec> out;
    for (int a = 0; 2 * a <= m; ++a)
        for (int r = 0; 2 * a + r <= m; ++r)
            for (int s = 0; 2 * a + r + s <= m; ++s)
                out.push_back(BracketSpec{a, r, s, m - 2 * a - r - s});
    return out;
}

} // namespace

SuiteReport osp_suite(const Algebra& alg) {
    SuiteReport rep;
    rep.suite = "osp";
    rep.params = algebra_params(alg);
    const auto& o = alg.osp();
    auto sc = [&](const WCElement& a, const WCElement& b) { return alg.super_commutator(a, b); };

    const Scalar two(2), minus_two(-2);
    rep.entries.push_back(check_eq("[H,E] = 2E", {}, sc(o.H, o.E), o.E * two));
    rep.entries.push_back(check_eq("[H,X] = X", {}, sc(o.H, o.X), o.X));
    rep.entries.push_back(check_eq("[H,Y] = -Y", {}, sc(o.H, o.Y), -o.Y));
    rep.entries.push_back(check_eq("[H,F] = -2F", {}, sc(o.H, o.F), o.F * minus_two));
    rep.entries.push_back(check_eq("[Y,Y] = -2F", {}, sc(o.Y, o.Y), o.F * minus_two));
    rep.entries.push_back(check_eq("[X,X] = 2E", {}, sc(o.X, o.X), o.E * two));
    rep.entries.push_back(check_eq("[Y,E] = X", {}, sc(o.Y, o.E), o.X));
    rep.entries.push_back(check_eq("[X,F] = Y", {}, sc(o.X, o.F), o.Y));
    rep.entries.push_back(check_eq("[Y,X] = H", {}, sc(o.Y, o.X), o.H));
    rep.entries.push_back(check_eq("[E,F] = H", {}, sc(o.E, o.F), o.H));
    rep.entries.push_back(check_eq("[Y,F] = 0", {}, sc(o.Y, o.F), alg.zero()));
    rep.entries.push_back(check_eq("[X,E] = 0", {}, sc(o.X, o.E), alg.zero()));
    // embedding images square as stated
    rep.entries.push_back(check_eq("X^2 = E", {}, alg.mul(o.X, o.X), o.E));
    rep.entries.push_back(check_eq("Y^2 = -F", {}, alg.mul(o.Y, o.Y), -o.F));

    for (int i = 1; i <= alg.n(); ++i) {
        for (int j = 1; j <= alg.n(); ++j) {
            Scalar dij(i == j ? 1 : 0);
            rep.entries.push_back(check_eq("[d_i, x^j] = delta_i^j", {i, j},
                                           sc(alg.d(i), alg.x(j)), alg.scalar(dij)));
            rep.entries.push_back(check_eq("[d_i, x_j] = eta_ij", {i, j},
                                           sc(alg.d(i), alg.x_down(j)),
                                           alg.scalar(Scalar(alg.metric().down(i, j)))));
            rep.entries.push_back(check_eq("[d^i, x^j] = eta^ji", {i, j},
                                           sc(alg.d_up(i), alg.x(j)),
                                           alg.scalar(Scalar(alg.metric().up(j, i)))));
            rep.entries.push_back(check_eq("[d^i, x_j] = delta^i_j", {i, j},
                                           sc(alg.d_up(i), alg.x_down(j)), alg.scalar(dij)));
        }
    }
    return rep;
}

SuiteReport adjoint_suite(const Algebra& alg) {
    SuiteReport rep;
    rep.suite = "adjoint";
    rep.params = algebra_params(alg);
    const auto& o = alg.osp();
    const Scalar c = Scalar::c();
    auto sc = [&](const WCElement& a, const WCElement& b) { return alg.super_commutator(a, b); };
    for (int k = 1; k <= alg.n(); ++k) {
        rep.entries.push_back(check_eq("[X,x^k] = c g^k", {k}, sc(o.X, alg.x(k)), alg.g(k) * c));
        rep.entries.push_back(check_eq("[X,d_k] = 0", {k}, sc(o.X, alg.d(k)), alg.zero()));
        rep.entries.push_back(
            check_eq("[X,g^k] = 2c d^k", {k}, sc(o.X, alg.g(k)), alg.d_up(k) * (Scalar(2) * c)));
        rep.entries.push_back(check_eq("[Y,x^k] = 0", {k}, sc(o.Y, alg.x(k)), alg.zero()));
        rep.entries.push_back(
            check_eq("[Y,d_k] = -c g_k", {k}, sc(o.Y, alg.d(k)), alg.g_down(k) * (-c)));
        rep.entries.push_back(
            check_eq("[Y,g^k] = 2c x^k", {k}, sc(o.Y, alg.g(k)), alg.x(k) * (Scalar(2) * c)));
        rep.entries.push_back(check_eq("[H,x^k] = -x^k", {k}, sc(o.H, alg.x(k)), -alg.x(k)));
        rep.entries.push_back(check_eq("[H,d_k] = d_k", {k}, sc(o.H, alg.d(k)), alg.d(k)));
        rep.entries.push_back(check_eq("[H,g^k] = 0", {k}, sc(o.H, alg.g(k)), alg.zero()));
    }
    return rep;
}

SuiteReport projector_coeff_suite(int max_k) {
    SuiteReport rep;
    rep.suite = "projector-coefficients";
    rep.params = Json{{"max_k", max_k}};

    auto expect = [&](const std::string& name, const RatH& got, const RatH& want) {
        rep.entries.push_back(got == want
                                  ? CheckEntry::pass(name)
                                  : CheckEntry::fail(name, {}, "got " + got.str() + ", want " + want.str()));
    };

    expect("phi_0 = 1", projector_phi(0), RatH(1));
    expect("phi_1 = -1/(H+1)", projector_phi(1), -RatH::inv_var_plus(1));
    expect("phi_2 = 1/(H+1)", projector_phi(2), RatH::inv_var_plus(1));
    expect("phi_3 = -1/((H+1)(H+2))", projector_phi(3),
           -RatH(HPoly(Scalar(1)), HPoly::var_plus(Scalar(1)) * HPoly::var_plus(Scalar(2))));
    expect("phi_4 = 1/(2(H+1)(H+2))", projector_phi(4),
           RatH(HPoly(Scalar(Rational(1, 2))),
                HPoly::var_plus(Scalar(1)) * HPoly::var_plus(Scalar(2))));

    for (int k = 0; k <= max_k; ++k) {
        expect("phi_" + std::to_string(k) + " recursion = closed form", projector_phi(k),
               projector_phi_closed(k));
    }
    // the defining telescoping relation (-1)^k phi_k + kappa_{k+1} phi_{k+1} = 0
    for (int k = 0; k < max_k; ++k) {
        RatH lhs = projector_phi(k) * RatH(HPoly(Scalar(k % 2 == 0 ? 1 : -1))) +
                   RatH(projector_kappa(k + 1)) * projector_phi(k + 1);
        rep.entries.push_back(lhs.is_zero()
                                  ? CheckEntry::pass("telescoping at k=" + std::to_string(k))
                                  : CheckEntry::fail("telescoping at k=" + std::to_string(k), {},
                                                     lhs.str()));
    }
    return rep;
}

SuiteReport projector_module_suite(const Algebra& alg, int max_degree) {
    SuiteReport rep;
    rep.suite = "projector-module";
    rep.params = algebra_params(alg);
    rep.params["max_degree"] = max_degree;
    const int n = alg.n();
    const GammaSet gmax = GammaSet(1) << n;

    struct Task {
        int d;
        MultiIndex alpha;
        GammaSet s;
    };
    std::vector<Task> tasks;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& alpha : degree_multi_indices(n, d))
            for (GammaSet s = 0; s < gmax; ++s) tasks.push_back({d, alpha, s});

    run_tasks(
        tasks.size(),
        [&](size_t idx) -> std::vector<CheckEntry> {
            const Task& t = tasks[idx];
            std::vector<int> where{t.d, static_cast<int>(t.s)};
            CliffordPolynomial v = CliffordPolynomial::monomial(n, t.alpha, t.s);
            const int N = t.d + 2; // X^{N} kills both v and Yv
            std::vector<CheckEntry> out;
            CliffordPolynomial xp = act(alg.osp().X, truncated_projector(v, N, alg), alg);
            out.push_back(xp.is_zero()
                              ? CheckEntry::pass("X P_N = 0", where)
                              : CheckEntry::fail("X P_N = 0", where, xp.str()));
            CliffordPolynomial py =
                truncated_projector(act(alg.osp().Y, v, alg), N, alg);
            out.push_back(py.is_zero()
                              ? CheckEntry::pass("P_N Y = 0", where)
                              : CheckEntry::fail("P_N Y = 0", where, py.str()));
            return out;
        },
        rep.entries);

    // P_N(v) = (H+1)...(H+k) v on oracle solutions, N = deg + 1
    for (int d = 0; d <= max_degree; ++d) {
        const int N = d + 1;
        HPoly clear(Scalar(1));
        for (int j = 1; j <= (N + 1) / 2; ++j) clear = clear * HPoly::var_plus(Scalar(j));
        Scalar factor = clear.eval(h_eigenvalue(d, n));
        size_t i = 0;
        for (const auto& v : dirac_kernel(d, alg)) {
            CliffordPolynomial got = truncated_projector(v, N, alg);
            CliffordPolynomial want = v * factor;
            rep.entries.push_back(got == want
                                      ? CheckEntry::pass("P_N = prod(H+j) on V+", {d, static_cast<int>(i)})
                                      : CheckEntry::fail("P_N = prod(H+j) on V+",
                                                         {d, static_cast<int>(i)},
                                                         (got - want).str()));
            ++i;
        }
    }
    return rep;
}

SuiteReport diamond_suite(const Algebra& alg) {
    SuiteReport rep;
    rep.suite = "diamond";
    rep.params = algebra_params(alg);
    const int n = alg.n();
    const RatH phi1 = projector_phi(1);
    const RatH phi2 = projector_phi(2);

    auto hc = [&](const WCElement& e) { return HCoeffElement::from_wc(e); };
    auto dmd = [&](const WCElement& a, const WCElement& b) {
        return diamond(coset_of(a), coset_of(b), alg).rep;
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // d_i <> g^j = d_i g^j - phi_1(H-1) g_i d^j
            HCoeffElement want = hc(alg.mul(alg.d(i), alg.g(j))) -
                                 hc(alg.mul(alg.g_down(i), alg.d_up(j))).left_mul(phi1.shifted(-1));
            rep.entries.push_back(check_eq("d_i <> g^j", {i, j}, dmd(alg.d(i), alg.g(j)), want));

            // g^i <> g^j = g^i g^j - 2 phi_1(H) x^i d^j
            want = hc(alg.mul(alg.g(i), alg.g(j))) -
                   hc(alg.mul(alg.x(i), alg.d_up(j))).left_mul(phi1 * RatH(2));
            rep.entries.push_back(check_eq("g^i <> g^j", {i, j}, dmd(alg.g(i), alg.g(j)), want));

            // d_i <> x^j = d_i x^j - phi_1(H-1)/2 g_i g^j + phi_2(H-1) x_i d^j
            want = hc(alg.mul(alg.d(i), alg.x(j))) -
                   hc(alg.mul(alg.g_down(i), alg.g(j)))
                       .left_mul(phi1.shifted(-1) * RatH(HPoly(Scalar(Rational(1, 2))))) +
                   hc(alg.mul(alg.x_down(i), alg.d_up(j))).left_mul(phi2.shifted(-1));
            rep.entries.push_back(check_eq("d_i <> x^j", {i, j}, dmd(alg.d(i), alg.x(j)), want));

            // g^i <> x^j = g^i x^j - phi_1(H) x^i g^j
            want = hc(alg.mul(alg.g(i), alg.x(j))) -
                   hc(alg.mul(alg.x(i), alg.g(j))).left_mul(phi1);
            rep.entries.push_back(check_eq("g^i <> x^j", {i, j}, dmd(alg.g(i), alg.x(j)), want));
        }
    }

    // a <> d_j = a d_j and x^i <> a = x^i a for generator a's
    std::vector<std::pair<std::string, WCElement>> gens;
    for (int k = 1; k <= n; ++k) {
        gens.emplace_back("x" + std::to_string(k), alg.x(k));
        gens.emplace_back("d" + std::to_string(k), alg.d(k));
        gens.emplace_back("g" + std::to_string(k), alg.g(k));
    }
    gens.emplace_back("x1*d1*g1", alg.mul(alg.x(1), alg.mul(alg.d(1), alg.g(1))));
    for (const auto& [name, a] : gens) {
        for (int j = 1; j <= n; ++j) {
            rep.entries.push_back(check_eq("(" + name + ") <> d_j = plain product", {j},
                                           dmd(a, alg.d(j)), hc(alg.mul(a, alg.d(j)))));
            rep.entries.push_back(check_eq("x^j <> (" + name + ") = plain product", {j},
                                           dmd(alg.x(j), a), hc(alg.mul(alg.x(j), a))));
        }
        // phi(H) <> a and a <> phi(H) for phi = 1/(H+1)
        RatH phi = RatH::inv_var_plus(1);
        HCoeffElement pa = diamond(CosetRep{HCoeffElement::from_rath(phi, alg)},
                                   coset_of(a), alg).rep;
        rep.entries.push_back(check_eq("phi(H) <> (" + name + ")", {},
                                       pa, hc(a).left_mul(phi)));
        HCoeffElement ap = diamond(coset_of(a),
                                   CosetRep{HCoeffElement::from_rath(phi, alg)}, alg).rep;
        HCoeffElement want(alg.n());
        for (const auto& [m, c] : a.terms())
            want.add_term(m, phi.shifted(m.h_shift_weight()) * c);
        rep.entries.push_back(check_eq("(" + name + ") <> phi(H)", {}, ap, want));
    }
    return rep;
}

SuiteReport presentation_suite(const Algebra& alg, int degree_bound) {
    SuiteReport rep;
    rep.suite = "presentation";
    rep.params = algebra_params(alg);
    rep.params["degree_bound"] = degree_bound;
    const int n = alg.n();

    struct Task {
        std::string name;
        std::vector<int> idx;
        CosetRep lhs;
        CosetRep rhs;
    };
    std::vector<Task> tasks;

    auto dm = [&](const WCElement& a, const WCElement& b) {
        return diamond(coset_of(a), coset_of(b), alg);
    };
    auto lm = [&](const RatH& phi, const CosetRep& r) { return CosetRep{r.rep.left_mul(phi)}; };
    auto add = [&](CosetRep a, const CosetRep& b) { return CosetRep{a.rep + b.rep}; };
    auto sub = [&](CosetRep a, const CosetRep& b) { return CosetRep{a.rep - b.rep}; };

    const RatH invH = RatH(HPoly(Scalar(1)), HPoly::var());
    const RatH invH1 = RatH::inv_var_plus(1);

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            // (a) d_i<>g^j - g^j<>d_i = 1/H g_i<>d^j
            tasks.push_back({"(a) [d_i, g^j]<> = 1/H g_i<>d^j",
                             {i, j},
                             sub(dm(alg.d(i), alg.g(j)), dm(alg.g(j), alg.d(i))),
                             lm(invH, dm(alg.g_down(i), alg.d_up(j)))});
            // (b) g^i<>g^j + g^j<>g^i = 2 eta^{ij} + 2/(H+1)(x^j<>d^i + x^i<>d^j)
            tasks.push_back(
                {"(b) {g^i, g^j}<> = 2eta^{ij} + 2/(H+1)(x^j<>d^i + x^i<>d^j)",
                 {i, j},
                 add(dm(alg.g(i), alg.g(j)), dm(alg.g(j), alg.g(i))),
                 add(CosetRep{HCoeffElement::from_wc(
                         alg.scalar(Scalar(Rational(2) * alg.metric().up(i, j))))},
                     lm(invH1 * RatH(2),
                        add(dm(alg.x(j), alg.d_up(i)), dm(alg.x(i), alg.d_up(j)))))});
            // (c) d_i<>x^j - x^j<>d_i = delta + 1/(2H) g_i<>g^j + 1/(H+1) x_i<>d^j
            tasks.push_back(
                {"(c) [d_i, x^j]<> = delta_i^j + 1/(2H) g_i<>g^j + 1/(H+1) x_i<>d^j",
                 {i, j},
                 sub(dm(alg.d(i), alg.x(j)), dm(alg.x(j), alg.d(i))),
                 add(CosetRep{HCoeffElement::from_wc(alg.scalar(Scalar(i == j ? 1 : 0)))},
                     add(lm(invH * RatH(HPoly(Scalar(Rational(1, 2)))),
                            dm(alg.g_down(i), alg.g(j))),
                         lm(invH1, dm(alg.x_down(i), alg.d_up(j)))))});
            // (d) g^i<>x^j - x^j<>g^i = 1/(H+1) x^i<>g^j
            tasks.push_back({"(d) [g^i, x^j]<> = 1/(H+1) x^i<>g^j",
                             {i, j},
                             sub(dm(alg.g(i), alg.x(j)), dm(alg.x(j), alg.g(i))),
                             lm(invH1, dm(alg.x(i), alg.g(j)))});
        }
    }

    // contracted relations, Einstein sums made explicit
    CosetRep xd{HCoeffElement(alg.n())}, gd{HCoeffElement(alg.n())}, gx{HCoeffElement(alg.n())};
    for (int i = 1; i <= n; ++i) {
        xd = add(xd, dm(alg.x(i), alg.d(i)));
        gd = add(gd, dm(alg.g(i), alg.d(i)));
        gx = add(gx, dm(alg.g_down(i), alg.x(i)));
    }
    HPoly minus_h_n2(std::vector<Scalar>{Scalar(Rational(-alg.n(), 2)), Scalar(-1)});
    tasks.push_back({"(e) x^i<>d_i = (-n/2 - H) 1", {},
                     xd,
                     CosetRep{HCoeffElement::from_rath(RatH(minus_h_n2), alg)}});
    tasks.push_back({"(f) g^i<>d_i = 0", {}, gd, CosetRep{HCoeffElement(alg.n())}});
    tasks.push_back({"(g) g_i<>x^i = 0", {}, gx, CosetRep{HCoeffElement(alg.n())}});

    run_tasks(
        tasks.size(),
        [&](size_t idx) -> std::vector<CheckEntry> {
            const Task& t = tasks[idx];
            CosetEqResult r = coset_eq(t.lhs, t.rhs, degree_bound, alg);
            std::vector<CheckEntry> out;
            switch (r.status) {
            case CosetEqResult::Status::equal:
                out.push_back(CheckEntry::pass(t.name, t.idx));
                break;
            case CosetEqResult::Status::not_equal:
                out.push_back(CheckEntry::fail(t.name, t.idx, r.witness));
                break;
            case CosetEqResult::Status::indeterminate:
                out.push_back(CheckEntry::skip(t.name, t.idx, "all components pole-skipped"));
                break;
            }
            for (int d : r.skipped_degrees)
                out.push_back(CheckEntry::skip(t.name + " [pole]", t.idx,
                                               "degree " + std::to_string(d) + " skipped"));
            return out;
        },
        rep.entries);
    return rep;
}

SuiteReport brackets_suite(const Algebra& alg, int max_m) {
    SuiteReport rep;
    rep.suite = "brackets";
    rep.params = algebra_params(alg);
    rep.params["max_m"] = max_m;
    const int n = alg.n();

    // Identity checks over every index tuple; orbit invariance vs the fully
    // symmetrized oracle on the smaller arities.
    struct Task {
        int m;
        std::vector<int> tuple;
    };
    std::vector<Task> tasks;
    for (int m = 1; m <= max_m; ++m)
        for (auto& t : all_tuples(n, m)) tasks.push_back({m, std::move(t)});

    run_tasks(
        tasks.size(),
        [&](size_t idx) -> std::vector<CheckEntry> {
            const auto& [m, tuple] = tasks[idx];
            std::vector<CheckEntry> out;
            for (const BracketSpec& spec : specs_of_arity(m)) {
                std::vector<int> where = tuple;
                where.insert(where.begin(),
                             {spec.eta_pairs, spec.x_count, spec.gamma_count, spec.del_count});

                if (m <= 4) {
                    out.push_back(check_eq("orbit sum = symmetrized/|G|", where,
                                           bracket(spec, tuple, alg),
                                           bracket_symmetrized_oracle(spec, tuple, alg)));
                }
                if (spec.gamma_count >= 2) {
                    auto [factor, reduced] = bracket_gamma_reduce(spec);
                    out.push_back(check_eq("gamma-pair reduction", where,
                                           bracket(spec, tuple, alg),
                                           bracket(reduced, tuple, alg) * factor));
                }
                if (spec.gamma_count <= 1) {
                    out.push_back(check_eq("ad(X) closed form", where,
                                           alg.ad_X(bracket(spec, tuple, alg)),
                                           ad_X_bracket(spec, tuple, alg)));
                }
            }
            // iterated ad(X) powers of [x^m]
            WCElement cur = bracket(BracketSpec{0, m, 0, 0}, tuple, alg);
            for (int p = 0; p <= 2 * m + 1; ++p) {
                int k = p / 2, r = p % 2;
                std::vector<int> where = tuple;
                where.insert(where.begin(), {m, k, r});
                out.push_back(
                    check_eq("ad(X)^{2k+r}[x^m] closed form", where, cur,
                             ad_X_power_xm(m, k, r, tuple, alg)));
                cur = alg.ad_X(cur);
            }
            return out;
        },
        rep.entries);
    return rep;
}

SuiteReport product_suite(const Algebra& alg, int max_m) {
    SuiteReport rep;
    rep.suite = "product";
    rep.params = algebra_params(alg);
    rep.params["max_m"] = max_m;
    const int n = alg.n();
    const GammaSet gmax = GammaSet(1) << n;

    struct Task {
        std::vector<int> tuple;
    };
    std::vector<Task> tasks;
    for (int m = 1; m <= max_m; ++m)
        for (auto& t : all_tuples(n, m)) tasks.push_back({std::move(t)});

    run_tasks(
        tasks.size(),
        [&](size_t idx) -> std::vector<CheckEntry> {
            const auto& tuple = tasks[idx].tuple;
            std::vector<CheckEntry> out;
            HCoeffElement closed = hat_product_closed_form(tuple, alg);
            for (GammaSet s = 0; s < gmax; ++s) {
                CliffordPolynomial p = CliffordPolynomial::monomial(
                    n, MultiIndex(static_cast<size_t>(n), 0), s);
                CliffordPolynomial via_closed = act(closed, p, alg);
                CliffordPolynomial via_compose = hat_x_compose(tuple, p, alg);
                std::vector<int> where = tuple;
                where.push_back(static_cast<int>(s));
                if (via_closed == via_compose) {
                    out.push_back(CheckEntry::pass("closed form = hat composition", where));
                } else {
                    out.push_back(CheckEntry::fail("closed form = hat composition", where,
                                                   (via_closed - via_compose).str()));
                }
            }
            return out;
        },
        rep.entries);
    return rep;
}

SuiteReport solutions_suite(const Algebra& alg, int max_m) {
    SuiteReport rep;
    rep.suite = "solutions";
    rep.params = algebra_params(alg);
    rep.params["max_m"] = max_m;
    const int n = alg.n();
    const GammaSet gmax = GammaSet(1) << n;

    std::vector<std::vector<int>> words;
    for (int m = 0; m <= max_m; ++m)
        for (auto& t : sorted_tuples(n, m)) words.push_back(std::move(t));

    run_tasks(
        words.size(),
        [&](size_t idx) -> std::vector<CheckEntry> {
            const auto& word = words[idx];
            const int m = static_cast<int>(word.size());
            std::vector<CheckEntry> out;
            CliffordPolynomial sol = solution_from_indices(word, CliffordElement(Scalar(1)), alg);

            CliffordPolynomial dirac = act(alg.osp().X, sol, alg);
            out.push_back(dirac.is_zero() ? CheckEntry::pass("X . solution = 0", word)
                                          : CheckEntry::fail("X . solution = 0", word, dirac.str()));

            // leading summand (-1)^m prod_{k=1}^m (n/2+m-k) x^{i_1}...x^{i_m}
            SolutionParts parts = solution_closed_form_parts(word, alg);
            Rational lead(1);
            for (int k = 1; k <= m; ++k) lead *= Rational(n, 2) + Rational(m - k);
            if (m % 2 == 1) lead = -lead;
            MultiIndex alpha(static_cast<size_t>(n), 0);
            for (int i : word) ++alpha[static_cast<size_t>(i - 1)];
            CliffordPolynomial want_lead =
                CliffordPolynomial::monomial(n, alpha, 0, Scalar(lead));
            out.push_back(parts.leading == want_lead
                              ? CheckEntry::pass("leading term coefficient", word)
                              : CheckEntry::fail("leading term coefficient", word,
                                                 parts.leading.str()));

            // composition oracle (the hats route through the projector)
            CliffordPolynomial composed =
                hat_x_compose(word, CliffordPolynomial::one(n), alg);
            out.push_back(sol == composed
                              ? CheckEntry::pass("closed form = hat composition", word)
                              : CheckEntry::fail("closed form = hat composition", word,
                                                 (sol - composed).str()));

            // right Clifford factor on every gamma monomial
            for (GammaSet s = 0; s < gmax; ++s) {
                CliffordElement p = CliffordElement::monomial(s);
                CliffordPolynomial with_p = solution_from_indices(word, p, alg);
                std::vector<int> where = word;
                where.push_back(static_cast<int>(s));
                bool ok = with_p == right_mul(sol, p, alg);
                if (ok && m <= 3)
                    ok = with_p == hat_x_compose(word, CliffordPolynomial::from_clifford(n, p), alg);
                out.push_back(ok ? CheckEntry::pass("right Clifford factor", where)
                                 : CheckEntry::fail("right Clifford factor", where, with_p.str()));
            }
            return out;
        },
        rep.entries);
    return rep;
}

SuiteReport cyclicity_suite(const Algebra& alg, int max_degree, std::uint64_t seed,
                            int round_trips) {
    SuiteReport rep;
    rep.suite = "cyclicity";
    rep.params = algebra_params(alg);
    rep.params["max_degree"] = max_degree;
    rep.params["seed"] = seed;
    const int n = alg.n();
    const GammaSet gmax = GammaSet(1) << n;

    // spanning: generated solutions vs oracle kernel, degree by degree
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<CliffordPolynomial> oracle = dirac_kernel(d, alg);
        std::vector<CliffordPolynomial> generated;
        for (const auto& word : sorted_tuples(n, d))
            for (GammaSet s = 0; s < gmax; ++s)
                generated.push_back(solution_from_indices(word, CliffordElement::monomial(s), alg));
        int rank_gen = span_rank(generated);
        bool rank_ok = rank_gen == static_cast<int>(oracle.size());
        if (rank_ok) {
            std::vector<CliffordPolynomial> both = oracle;
            both.insert(both.end(), generated.begin(), generated.end());
            rank_ok = span_rank(both) == static_cast<int>(oracle.size());
        }
        rep.entries.push_back(rank_ok
                                  ? CheckEntry::pass("generated span = oracle kernel", {d})
                                  : CheckEntry::fail("generated span = oracle kernel", {d},
                                                     "rank " + std::to_string(rank_gen) +
                                                         " vs dim " + std::to_string(oracle.size())));
    }

    // reconstruction round trips on random kernel combinations
    std::mt19937_64 rng(seed);
    std::vector<std::vector<CliffordPolynomial>> bases;
    for (int d = 0; d <= max_degree; ++d) bases.push_back(dirac_kernel(d, alg));
    for (int trip = 0; trip < round_trips; ++trip) {
        CliffordPolynomial phi(n);
        int picks = 1 + static_cast<int>(rng() % 4);
        for (int p = 0; p < picks; ++p) {
            const auto& basis = bases[rng() % bases.size()];
            if (basis.empty()) continue;
            const auto& v = basis[rng() % basis.size()];
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 4);
            if (num == 0) num = 1;
            phi += v * Scalar(Rational(num, den));
        }
        if (phi.is_zero()) phi = CliffordPolynomial::one(n);
        Reconstruction rec = reconstruct(phi, alg);
        CliffordPolynomial back = apply_reconstruction(rec, alg);
        rep.entries.push_back(back == phi
                                  ? CheckEntry::pass("reconstruct round trip", {trip})
                                  : CheckEntry::fail("reconstruct round trip", {trip},
                                                     (back - phi).str()));

        // top Clifford coefficient: extraction matches direct read-off
        const int d = phi.degree();
        const MultiIndex* beta = nullptr;
        for (const auto& [key, c] : phi.terms()) {
            if (static_cast<int>(multi_total(key.first)) != d) continue;
            if (!beta || *beta < key.first) beta = &key.first;
        }
        CliffordElement expected;
        for (const auto& [key, c] : phi.terms())
            if (key.first == *beta) expected.add_term(key.second, c);
        CliffordElement got = extract_clifford_top(phi, alg);
        rep.entries.push_back(got == expected
                                  ? CheckEntry::pass("extract_clifford_top read-off", {trip})
                                  : CheckEntry::fail("extract_clifford_top read-off", {trip},
                                                     got.str() + " vs " + expected.str()));
    }
    return rep;
}

} // namespace dra::verify
