#pragma once

// JSON forms of points, decompositions, validation reports and bound rows.
// Rationals are written as strings ("p" or "p/q").

#include <waring/bounds.hpp>
#include <waring/decomposer.hpp>
#include <waring/initial_ideal.hpp>

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace waring {

using Json = nlohmann::ordered_json;

/// Integers fitting in 64 bits become JSON numbers, larger ones strings.
inline Json big_to_json(const BigInt& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json point_to_json(const ProjPoint& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

inline Json points_to_json(const std::vector<ProjPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

inline Json exponents_to_json(const ExponentSeq& a) {
  Json out = Json::array();
  for (unsigned v : a.values()) out.push_back(v);
  return out;
}

inline Json decomposition_to_json(const WaringDecomposition& dec) {
  Json out;
  out["exponents"] = exponents_to_json(dec.a);
  out["degree"] = dec.degree();
  out["t"] = to_string(dec.t);
  Json pts = Json::array(), lams = Json::array();
  for (const auto& w : dec.terms) {
    pts.push_back(point_to_json(w.point));
    lams.push_back(to_string(w.lambda));
  }
  out["points"] = std::move(pts);
  out["lambdas"] = std::move(lams);
  out["term_count"] = dec.terms.size();
  out["nonzero_terms"] = dec.nonzero_terms();
  out["system_rank"] = dec.system_rank;
  out["bound"] = big_to_json(count_formula(dec.a));
  out["verified"] = dec.verified;
  return out;
}

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error("expected a rational as a string or integer");
}

}  // namespace detail

/// Reads the fields needed to re-check a decomposition; `verified` is reset.
inline WaringDecomposition decomposition_from_json(const Json& j) {
  try {
    std::vector<unsigned> a;
    for (const auto& v : j.at("exponents")) {
      const long e = v.get<long>();
      if (e < 1) throw Error("exponents must be positive");
      a.push_back(static_cast<unsigned>(e));
    }
    WaringDecomposition dec;
    dec.a = ExponentSeq(a);
    dec.t = detail::rational_from_json(j.at("t"));
    const auto& pts = j.at("points");
    const auto& lams = j.at("lambdas");
    if (!pts.is_array() || !lams.is_array() || pts.size() != lams.size())
      throw Error("points and lambdas must be arrays of equal length");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ProjPoint p;
      for (const auto& c : pts[i]) p.push_back(detail::rational_from_json(c));
      if (p.size() != dec.a.size()) throw Error("point " + std::to_string(i) + " has wrong dimension");
      dec.terms.push_back({detail::rational_from_json(lams[i]), std::move(p)});
    }
    if (j.contains("degree") && j.at("degree").get<long>() != static_cast<long>(dec.a.degree()))
      throw Error("degree does not match the exponents");
    return dec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed decomposition: ") + e.what());
  }
}

inline Json monomial_ideal_to_json(const MonomialIdeal& m) {
  Json out = Json::array();
  for (const auto& s : m.to_strings()) out.push_back(s);
  return out;
}

inline Json initial_check_to_json(const ExponentSeq& a, const Rational& t, const InitialIdealCheck& c) {
  Json out;
  out["exponents"] = exponents_to_json(a);
  out["t"] = to_string(t);
  out["initial_ideal"] = monomial_ideal_to_json(c.computed);
  out["predicted"] = monomial_ideal_to_json(c.expected);
  out["ideals_match"] = c.ideals_match;
  out["degree"] = big_to_json(c.degree);
  out["count_formula"] = big_to_json(c.count);
  out["pairs_reduced"] = c.pairs_reduced;
  out["pass"] = c.pass();
  return out;
}

inline Json report_to_json(const ValidationReport& r, bool with_timing = false) {
  Json out;
  out["exponents"] = exponents_to_json(r.a);
  out["t"] = to_string(r.t);
  Json steps = Json::array();
  auto step = [&](int id, const char* name, Json pass, Json detail) {
    Json s;
    s["step"] = id;
    s["name"] = name;
    s["pass"] = std::move(pass);
    for (auto& [k, v] : detail.items()) s[k] = v;
    steps.push_back(std::move(s));
  };
  step(1, "point_count", r.step_count,
       {{"enumerated", r.points_enumerated}, {"distinct", r.points_distinct}, {"expected", big_to_json(r.expected_count)}});
  step(2, "generators_vanish", r.step_vanish, Json::object());
  step(3, "apolar_membership", r.step_apolar, Json::object());
  {
    Json d = Json::object();
    d["ran"] = r.groebner_ran;
    d["budget_exhausted"] = r.groebner_budget_exhausted;
    d["initial_ideal"] = r.initial_ideal;
    d["predicted"] = r.predicted_initial_ideal;
    step(4, "initial_ideal", r.step_initial_ideal ? Json(*r.step_initial_ideal) : Json(nullptr), d);
  }
  {
    Json d = Json::object();
    d["stable_value"] = r.hilbert_stable_value ? big_to_json(*r.hilbert_stable_value) : Json(nullptr);
    d["stable_from"] = r.hilbert_stable_from;
    d["points"] = r.points_distinct;
    if (!r.hilbert_error.empty()) d["error"] = r.hilbert_error;
    step(5, "hilbert_stabilization", r.step_hilbert, d);
  }
  out["steps"] = std::move(steps);
  out["budget_exhausted"] = r.budget_exhausted;
  out["first_failure"] = r.first_failure();
  out["pass"] = r.pass();
  if (with_timing) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timing_ms) t[k] = v;
    out["timing_ms"] = std::move(t);
  }
  return out;
}

inline Json bounds_to_json(const std::vector<BoundsRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["exponents"] = exponents_to_json(r.a);
    j["UB_BT"] = big_to_json(r.ub_bt);
    j["UB_CKOV"] = big_to_json(r.ub_ckov);
    j["UB_HM"] = big_to_json(r.ub_hm);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace waring
