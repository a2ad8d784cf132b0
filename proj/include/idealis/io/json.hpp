#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "idealis/containment/verdict.hpp"

namespace idealis {

using Json = nlohmann::ordered_json;

// Ideal files: {"ring": {"vars": [...], "field": "q"}, "gens": [...]}, plus
// "order" when the generators are a reduced basis.

template <CoefficientField F>
Json ideal_to_json(const Ideal<F>& ideal, bool as_basis = false) {
  const auto& ring = ideal.ring();
  Json j;
  j["ring"] = {{"vars", ring->variables()}, {"field", ring->field().tag()}};
  const auto& gens = as_basis ? ideal.basis().elements : ideal.generators();
  j["gens"] = Json::array();
  for (const auto& g : gens) j["gens"].push_back(to_string(g));
  if (as_basis) j["order"] = ideal.basis().ring->order().name();
  return j;
}

/// Reads an ideal over `field`; the file's field tag must agree.
template <CoefficientField F>
Ideal<F> ideal_from_json(const Json& j, const F& field) {
  try {
    const auto& r = j.at("ring");
    if (r.at("field").get<std::string>() != field.tag())
      throw ParseError("ideal file is over " + r.at("field").get<std::string>() + ", expected " + field.tag());
    auto vars = r.at("vars").get<std::vector<std::string>>();
    MonomialOrder order = j.contains("order") ? MonomialOrder::parse(j["order"].get<std::string>())
                                              : MonomialOrder::degrevlex();
    auto ring = make_ring(field, std::move(vars), order);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : j.at("gens")) gens.push_back(parse_polynomial(g.get<std::string>(), ring));
    return Ideal<F>(ring, std::move(gens));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ideal file: ") + e.what());
  }
}

// Arrangement files: {"field": "qsqrt:3", "lines": [["1","0","-1/2*sqrt3"], ...]}.

template <CoefficientField F>
Json arrangement_to_json(const Arrangement<F>& arr) {
  Json j;
  if (!arr.name().empty()) j["name"] = arr.name();
  j["field"] = arr.field().tag();
  j["lines"] = Json::array();
  for (const auto& l : arr.lines()) {
    j["lines"].push_back({element_to_text<F>(l[0]), element_to_text<F>(l[1]), element_to_text<F>(l[2])});
  }
  return j;
}

template <CoefficientField F>
Arrangement<F> arrangement_from_json(const Json& j, const F& field) {
  try {
    std::vector<LinearForm<F>> lines;
    for (const auto& l : j.at("lines")) {
      if (!l.is_array() || l.size() != 3) throw ParseError("each line needs three coefficients");
      auto coef = [&](std::size_t k) {
        const auto& v = l[k];
        return parse_element(v.is_string() ? v.get<std::string>() : v.dump(), field);
      };
      lines.emplace_back(coef(0), coef(1), coef(2));
    }
    return Arrangement<F>(field, std::move(lines), j.value("name", std::string()));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed arrangement file: ") + e.what());
  }
}

inline Json digest_to_json(const PolynomialDigest& d) {
  if (d.degree < 0) return nullptr;
  return {{"terms", d.terms}, {"degree", d.degree}, {"leading_term", d.leading_term}, {"hash", d.hash}};
}

inline Json stats_to_json(const GroebnerStats& s) {
  return {{"pairs_created", s.pairs_created},       {"pairs_reduced", s.pairs_reduced},
          {"zero_reductions", s.zero_reductions},   {"product_criterion", s.product_criterion},
          {"chain_criterion", s.chain_criterion},   {"degree_dropped", s.degree_dropped},
          {"max_queue", s.max_queue},               {"basis_size", s.basis_size},
          {"stored_terms", s.stored_terms},         {"max_sugar", s.max_sugar}};
}

/// Evidence label: a verdict over F_p is a certificate only for
/// non-containment of a polynomial defined over Q.
inline std::string verdict_label(Outcome o, std::optional<std::uint64_t> prime) {
  switch (o) {
    case Outcome::Holds: return prime ? "evidence (mod p)" : "proved";
    case Outcome::Fails: return prime ? "non-containment certified (mod p)" : "non-containment proved";
    default: return "undecided";
  }
}

struct VerdictContext {
  std::string instance;
  std::optional<std::uint64_t> prime;
  std::string model;
  std::string strategy;
  bool include_timing = true;
};

inline Json verdict_to_json(const ContainmentVerdict& v, const VerdictContext& ctx) {
  Json j;
  j["instance"] = ctx.instance;
  j["mode"] = "full";
  j["field"] = v.field;
  j["prime"] = ctx.prime ? Json(*ctx.prime) : Json(nullptr);
  j["model"] = ctx.model;
  j["m"] = v.m;
  j["r"] = v.r;
  j["outcome"] = outcome_name(v.outcome);
  j["holds"] = v.outcome == Outcome::Undecided ? Json(nullptr) : Json(v.holds());
  j["label"] = verdict_label(v.outcome, ctx.prime);
  if (v.failing_generator) {
    j["certificate"] = {{"kind", "nonzero normal form of a generator of I^(m) modulo I^r"},
                        {"generator", *v.failing_generator},
                        {"normal_form", digest_to_json(v.normal_form)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["points"] = v.points;
  j["strategy"] = ctx.strategy;
  j["generator_counts"] = {{"symbolic", v.symbolic_generators}, {"power", v.power_generators}, {"basis", v.basis_size}};
  j["degrees"] = v.symbolic_degrees;
  j["wall_time"] = ctx.include_timing ? Json(v.seconds) : Json(nullptr);
  j["resource_stats"] = stats_to_json(v.stats);
  if (!v.undecided_reason.empty()) j["undecided_reason"] = v.undecided_reason;
  return j;
}

inline Json witness_to_json(const WitnessVerdict& w, const VerdictContext& ctx) {
  Json j;
  j["instance"] = ctx.instance;
  j["mode"] = "witness";
  j["field"] = ctx.prime ? "fp:" + std::to_string(*ctx.prime) : std::string();
  j["prime"] = ctx.prime ? Json(*ctx.prime) : Json(nullptr);
  j["model"] = ctx.model;
  j["m"] = w.m;
  j["r"] = w.r;
  const bool certified = w.in_symbolic && w.in_power == false;
  j["outcome"] = certified ? "fails" : "undecided";
  j["holds"] = certified ? Json(false) : Json(nullptr);
  j["label"] = certified ? verdict_label(Outcome::Fails, ctx.prime) : "undecided";
  if (certified) {
    j["certificate"] = {{"kind", "witness of degree " + std::to_string(w.degree) + " in I^(m) with nonzero normal form modulo I^r"},
                        {"normal_form", digest_to_json(w.normal_form)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["points"] = w.points;
  j["strategy"] = ctx.strategy;
  j["witness"] = {{"degree", w.degree},
                  {"in_symbolic_power", w.in_symbolic},
                  {"min_vanishing_order", w.min_order},
                  {"low_order_points", w.low_order_points},
                  {"in_ordinary_power", w.in_power ? Json(*w.in_power) : Json(nullptr)}};
  j["generator_counts"] = Json::object();
  j["degrees"] = {w.degree};
  j["wall_time"] = ctx.include_timing ? Json(w.seconds_pointwise + w.seconds_membership) : Json(nullptr);
  j["resource_stats"] = stats_to_json(w.stats);
  if (!w.undecided_reason.empty()) j["undecided_reason"] = w.undecided_reason;
  return j;
}

/// Curve report: invariant-basis coordinates, expanded form and per-orbit
/// vanishing orders.
template <CoefficientField F>
Json curve_report_to_json(const std::string& name, const InvariantBasis<F>& basis, const std::vector<InvariantCurve<F>>& kernel,
                          const std::vector<OrbitVanishing<F>>& verification) {
  Json j;
  j["curve"] = name;
  j["field"] = basis.ring->field().tag();
  j["kernel_dim"] = kernel.size();
  if (kernel.empty()) return j;
  const auto& c = kernel.front();
  j["degree"] = c.degree;
  j["basis_exponents"] = Json::array();
  j["coefficients"] = Json::array();
  for (std::size_t k = 0; k < c.exponents.size(); ++k) {
    j["basis_exponents"].push_back(c.exponents[k]);
    j["coefficients"].push_back(element_to_text<F>(c.coefficients[k]));
  }
  j["basis_labels"] = Json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) j["basis_labels"].push_back(basis.label(k));
  j["expanded"] = to_string(c.polynomial);
  j["imposed_orbits"] = Json::array();
  for (const auto& o : c.imposed) j["imposed_orbits"].push_back({{"representative", o.representative.to_string()}, {"order", o.order}});
  j["verification"] = Json::array();
  for (const auto& v : verification) {
    j["verification"].push_back({{"representative", v.representative.to_string()},
                                 {"imposed", v.imposed},
                                 {"orbit_size", v.orbit_size},
                                 {"min_order", v.min_order}});
  }
  return j;
}

}  // namespace idealis
