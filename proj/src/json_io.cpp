#include "crossout/json_io.hpp"

#include "crossout/errors.hpp"

namespace crossout {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const json& x : j) {
    if (!x.is_number_integer())
      throw ValidationError(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) throw ValidationError("big integer must be a string or integer");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos ||
      s.find('-', 1) != std::string::npos)
    throw ValidationError("malformed big integer '" + s + "'");
  return BigInt(s);
}

}  // namespace

json to_json(const Permutation& w) {
  return json(std::vector<int>(w.values().begin(), w.values().end()));
}

Permutation permutation_from_json(const json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  return Permutation(int_list(j, "permutation"));
}

json to_json(const DyckPath& p) { return p.to_string(); }

DyckPath dyck_path_from_json(const json& j) {
  if (j.is_string()) return DyckPath::parse(j.get<std::string>());
  const std::vector<int> down = int_list(j, "dyck path");
  return DyckPath::from_down_steps(2 * static_cast<int>(down.size()), down);
}

json to_json(const CrossoutTuple& t) {
  return json{{"pa", t.pa.to_string()},
              {"pb", t.pb.to_string()},
              {"ell", t.ell},
              {"em", t.em},
              {"parity", to_string(t.parity)}};
}

CrossoutTuple tuple_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("tuple must be an object");
  for (const char* key : {"pa", "pb", "ell", "em"})
    if (!j.contains(key)) throw ValidationError(std::string("tuple is missing \"") + key + "\"");
  CrossoutTuple t;
  t.pa = dyck_path_from_json(j.at("pa"));
  t.pb = dyck_path_from_json(j.at("pb"));
  t.ell = int_list(j.at("ell"), "ell");
  t.em = int_list(j.at("em"), "em");
  if (j.contains("parity")) {
    if (!j.at("parity").is_string()) throw ValidationError("parity must be a string");
    t.parity = parity_from_string(j.at("parity").get<std::string>());
  } else {
    t.parity = t.pb.length() == t.pa.length() + 2 ? Parity::Even : Parity::Odd;
  }
  return t;
}

json to_json(const Matching& m) {
  json out = json::array();
  for (const auto& [i, k] : m.pairs()) out.push_back({i, k});
  return out;
}

Matching matching_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("matching must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const json& p : j) {
    const std::vector<int> v = int_list(p, "matching pair");
    if (v.size() != 2) throw ValidationError("matching pair must have two entries");
    pairs.emplace_back(v[0], v[1]);
  }
  return Matching(std::move(pairs));
}

json to_json(const Rational& r) {
  return json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ValidationError("rational must be {\"num\", \"den\"}");
  const BigInt den = bigint_from_json(j.at("den"));
  if (den == 0) throw ValidationError("zero denominator");
  return Rational(bigint_from_json(j.at("num")), den);
}

json to_json(const StatBundle& s) {
  return json{{"aa", s.aa}, {"ab", s.ab}, {"ba", s.ba}, {"bb", s.bb}, {"z", s.z}, {"inv", s.inv}};
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"eq", e[0]}, {"er", e[1]}, {"et", e[2]}, {"c", c.str()}});
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw ValidationError("polynomial must be an array of terms");
    Polynomial p;
    for (const json& t : j)
      p.add_term({t.value("eq", 0), t.value("er", 0), t.value("et", 0)},
                 bigint_from_json(t.at("c")));
    return p;
  });
}

json to_json(const IdentityReport& r) {
  return json{{"id", r.id},
              {"n", r.n},
              {"params", r.params},
              {"kind", kind_name(r.lhs)},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"verdict", r.equal() ? "equal" : "unequal"},
              {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const std::vector<MoveRecord>& history) {
  json out = json::array();
  for (const MoveRecord& m : history)
    out.push_back({{"move", m.move},
                   {"player", std::string(1, to_char(m.player))},
                   {"position", m.position},
                   {"value", m.value}});
  return out;
}

json to_json(const Marking& m) {
  return json{{"marks", m.to_string()}, {"mark_order", m.mark_order}};
}

}  // namespace crossout
