#pragma once

#include "schubfact/factored.hpp"
#include "schubfact/schubert.hpp"
#include "schubfact/verifier.hpp"
#include "schubfact/wset.hpp"

#include <json.hpp>

namespace schubfact {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& w);
Json to_json(const Composition& mu);

// { "space": {"n", "s", "mu"}, "terms": [ {"exp": [["x1", 2], ...], "coeff": "..."} ] }
// Terms in ascending canonical order; coefficients as decimal strings.
Json to_json(const Polynomial& f);
Json to_json(const FactoredPolynomial& f);
Json to_json(const SchubertExpansion& e);
Json to_json(const WSet& w);
Json to_json(const IdentityReport& r, bool include_timing = false);
Json to_json(const SweepResult& s, bool include_timing = false);

Permutation permutation_from_json(const Json& j);
Composition composition_from_json(const Json& j);
// Accepts variable names ("x3", "y2_1") or numeric ids in "exp".
// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const Json& j);

} // namespace schubfact
