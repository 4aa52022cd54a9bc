#pragma once

#include <nlohmann/json.hpp>

#include "crossout/correspondence.hpp"
#include "crossout/game.hpp"
#include "crossout/hermite.hpp"
#include "crossout/identity_suite.hpp"
#include "crossout/polynomial.hpp"
#include "crossout/statistics.hpp"

namespace crossout {

using json = nlohmann::json;

json to_json(const Permutation& w);
Permutation permutation_from_json(const json& j);

/// Canonical output is the "UUDD" string; input also accepts a sorted list
/// of down-step positions (the length is twice the number of down steps).
json to_json(const DyckPath& p);
DyckPath dyck_path_from_json(const json& j);

/// {"pa": str, "pb": str, "ell": [int], "em": [int], "parity": "even"|"odd"}
json to_json(const CrossoutTuple& t);
CrossoutTuple tuple_from_json(const json& j);

/// [[i, j], ...]
json to_json(const Matching& m);
Matching matching_from_json(const json& j);

/// {"num": "3", "den": "4"}
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const StatBundle& s);

/// [{"eq":..,"er":..,"et":..,"c":"int"}, ...] in canonical term order.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"id", "n", "params", "kind", "lhs", "rhs", "verdict", "elapsed_ms"}
json to_json(const IdentityReport& r);

/// [{"move", "player": "A"|"B", "position", "value"}, ...]
json to_json(const std::vector<MoveRecord>& history);

json to_json(const Marking& m);

}  // namespace crossout
