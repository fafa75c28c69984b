#pragma once

#include "dra/clifford.hpp"
#include "dra/coset.hpp"
#include "dra/polymodule.hpp"
#include "dra/rath.hpp"
#include "dra/weyl_clifford.hpp"

#include <json.hpp>

namespace dra {

using Json = nlohmann::json;

// Rationals travel as numerator/denominator digit strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const RatH& f);
RatH rath_from_json(const Json& j);

Json to_json(const Metric& g);
Metric metric_from_json(const Json& j);

Json to_json(const CliffordElement& e);
CliffordElement clifford_from_json(const Json& j);

Json to_json(const WCElement& e);
WCElement wc_from_json(const Json& j);

Json to_json(const HCoeffElement& e);

Json to_json(const CliffordPolynomial& v);
CliffordPolynomial poly_from_json(const Json& j);

/// [{degree, terms: [{alpha, gammas, coeff}]}]
Json basis_to_json(int degree, const std::vector<CliffordPolynomial>& basis);

} // namespace dra
