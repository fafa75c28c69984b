#include "dra/json_io.hpp"

namespace dra {

namespace {

std::vector<int> gamma_list(GammaSet s) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (s & (GammaSet(1) << i)) out.push_back(i + 1);
    return out;
}

GammaSet gamma_from_list(const Json& j) {
    GammaSet s = 0;
    for (int i : j.get<std::vector<int>>()) s |= GammaSet(1) << (i - 1);
    return s;
}

Json hpoly_to_json(const HPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return coeffs;
}

HPoly hpoly_from_json(const Json& j) {
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
    return HPoly(std::move(coeffs));
}

} // namespace

Json to_json(const Rational& r) {
    return Json{{"num", r.num().str()}, {"den", r.den().str()}};
}

Rational rational_from_json(const Json& j) {
    return Rational(BigInt(j.at("num").get<std::string>()),
                    BigInt(j.at("den").get<std::string>()));
}

Json to_json(const Scalar& s) {
    return Json{{"re", to_json(s.re())}, {"cc", to_json(s.cc())}};
}

Scalar scalar_from_json(const Json& j) {
    return Scalar(rational_from_json(j.at("re")), rational_from_json(j.at("cc")));
}

Json to_json(const RatH& f) {
    return Json{{"num", hpoly_to_json(f.num())}, {"den", hpoly_to_json(f.den())}};
}

RatH rath_from_json(const Json& j) {
    return RatH(hpoly_from_json(j.at("num")), hpoly_from_json(j.at("den")));
}

Json to_json(const Metric& g) {
    Json rows = Json::array();
    for (int i = 1; i <= g.n(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= g.n(); ++j) row.push_back(to_json(g.up(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Metric metric_from_json(const Json& j) {
    std::vector<std::vector<Rational>> up;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        up.push_back(std::move(r));
    }
    return Metric(std::move(up));
}

Json to_json(const CliffordElement& e) {
    Json terms = Json::array();
    for (const auto& [s, c] : e.terms())
        terms.push_back(Json{{"gammas", gamma_list(s)}, {"coeff", to_json(c)}});
    return terms;
}

CliffordElement clifford_from_json(const Json& j) {
    CliffordElement e;
    for (const auto& t : j) e.add_term(gamma_from_list(t.at("gammas")), scalar_from_json(t.at("coeff")));
    return e;
}

Json to_json(const WCElement& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        terms.push_back(Json{{"x", m.x},
                             {"d", m.d},
                             {"gammas", gamma_list(m.gammas)},
                             {"coeff", to_json(c)}});
    }
    return Json{{"n", e.n()}, {"terms", terms}};
}

WCElement wc_from_json(const Json& j) {
    WCElement e(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        WCMonomial m;
        m.x = t.at("x").get<MultiIndex>();
        m.d = t.at("d").get<MultiIndex>();
        m.gammas = gamma_from_list(t.at("gammas"));
        e.add_term(std::move(m), scalar_from_json(t.at("coeff")));
    }
    return e;
}

Json to_json(const HCoeffElement& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        terms.push_back(Json{{"x", m.x},
                             {"d", m.d},
                             {"gammas", gamma_list(m.gammas)},
                             {"coeff", to_json(c)}});
    }
    return Json{{"n", e.n()}, {"terms", terms}};
}

Json to_json(const CliffordPolynomial& v) {
    Json terms = Json::array();
    for (const auto& [key, c] : v.terms()) {
        terms.push_back(Json{{"alpha", key.first},
                             {"gammas", gamma_list(key.second)},
                             {"coeff", to_json(c)}});
    }
    return Json{{"n", v.n()}, {"terms", terms}};
}

CliffordPolynomial poly_from_json(const Json& j) {
    CliffordPolynomial v(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        v.add_term(t.at("alpha").get<MultiIndex>(), gamma_from_list(t.at("gammas")),
                   scalar_from_json(t.at("coeff")));
    return v;
}

Json basis_to_json(int degree, const std::vector<CliffordPolynomial>& basis) {
    Json vecs = Json::array();
    for (const auto& v : basis) vecs.push_back(to_json(v).at("terms"));
    return Json{{"degree", degree}, {"terms", vecs}};
}

} // namespace dra
