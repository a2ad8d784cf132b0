// idealis: arrangements, invariant curves and containment verdicts.
//
// Exit codes:
//   0  success (containment: I^(m) is contained in I^r)
//   1  other error
//   2  parse or usage error (bad flag, malformed file, bad prime)
//   3  the field does not support the requested model
//   4  interpolation found no curve (empty kernel)
//   5  rendering requested over a non-real field
//   10 non-containment certified
//   11 undecided (resource limit, time budget or interrupt)
#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "idealis/algebra/operations.hpp"
#include "idealis/invariant/singular.hpp"
#include "idealis/io/json.hpp"
#include "idealis/io/svg.hpp"

using namespace idealis;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kUnsupportedModel = 3,
  kEmptyKernel = 4,
  kNonReal = 5,
  kNonContainment = 10,
  kUndecided = 11,
};

std::atomic<bool> g_cancel{false};

extern "C" void on_signal(int) { g_cancel.store(true); }

struct RunConfig {
  std::string field;  // empty: the instance's default field
  std::string model = "sqrt3";
  std::string order = "degrevlex";
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
  std::size_t max_terms = GroebnerOptions{}.max_terms;
  double time_budget = 0;  // seconds, 0 = none
  bool json = false;
  bool timing = false;
  bool quiet = false;
  std::uint64_t seed = 1;

  GroebnerOptions groebner_options(const std::string& label) const {
    if (max_pairs == 0 || max_terms == 0) throw ParseError("resource caps must be positive");
    GroebnerOptions o;
    o.max_pairs = max_pairs;
    o.max_terms = max_terms;
    if (time_budget > 0) o.time_budget = std::chrono::milliseconds(static_cast<long long>(time_budget * 1000));
    o.cancel = &g_cancel;
    if (!quiet) {
      o.progress_interval = 2000;
      o.progress = [label](const GroebnerStats& s) {
        std::cerr << "[" << label << "] pairs " << s.pairs_reduced << " queue " << s.max_queue << " basis "
                  << s.basis_size << " sugar " << s.max_sugar << std::endl;
      };
    }
    return o;
  }
};

bool is_named(const std::string& name) {
  const auto& n = named_arrangements();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("'" + path + "' is neither a named arrangement nor a readable file");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

/// A named fixture or an arrangement file, with the field it lives over.
struct Instance {
  std::string name;
  Model model = Model::Sqrt3;
  std::optional<Json> file;
  AnyField field = RationalField{};
};

Instance resolve_instance(const std::string& name, const RunConfig& cfg) {
  Instance inst;
  inst.name = name;
  inst.model = parse_model(cfg.model);
  std::string tag = cfg.field;
  if (is_named(name)) {
    if (tag.empty()) {
      if (inst.model == Model::RationalTable1 || name == "triangle")
        tag = "q";
      else if (name == "dualHesse")
        tag = "fp:7";
      else
        tag = "qsqrt:3";
    }
  } else {
    inst.file = read_json_file(name);
    if (!inst.file->contains("field")) throw ParseError("arrangement file has no \"field\"");
    if (tag.empty()) tag = (*inst.file)["field"].get<std::string>();
    if (inst.file->contains("name")) inst.name = (*inst.file)["name"].get<std::string>();
  }
  inst.field = parse_field(tag);
  return inst;
}

template <CoefficientField F>
Arrangement<F> load_arrangement(const Instance& inst, const F& field) {
  if (inst.file) return arrangement_from_json(*inst.file, field);
  return build_named(inst.name, inst.model, field);
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- arrangement

struct ArrangementFlags {
  bool t_vector = false, points = false, orbits = false, charpoly = false, verify_tables = false, dump = false;
};

template <CoefficientField F>
int cmd_arrangement(const Instance& inst, const F& field, const ArrangementFlags& flags, const RunConfig& cfg) {
  auto arr = load_arrangement(inst, field);
  if (flags.dump) {
    std::cout << arrangement_to_json(arr).dump(2) << "\n";
    return kOk;
  }
  auto ps = intersection_points(arr);
  auto tv = t_vector(ps);
  std::ostringstream text;
  Json j;
  j["arrangement"] = inst.name;
  j["field"] = field.tag();
  j["model"] = model_name(inst.model);
  j["lines"] = arr.size();
  j["points"] = ps.size();
  j["t_vector"] = Json::object();
  for (auto [m, c] : tv) j["t_vector"]["t" + std::to_string(m)] = c;
  const bool any = flags.points || flags.orbits || flags.charpoly || flags.verify_tables;
  if (flags.t_vector || !any) text << t_vector_text(tv) << "; " << ps.size() << " points\n";
  if (flags.points) {
    j["point_list"] = Json::array();
    for (const auto& e : ps.entries()) {
      text << e.point.to_string() << " on " << e.multiplicity << " lines\n";
      j["point_list"].push_back({{"point", e.point.to_string()}, {"multiplicity", e.multiplicity}, {"lines", e.lines}});
    }
  }
  if (flags.orbits) {
    auto g = dihedral_group(field);
    auto orb = orbits(g, ps);
    std::map<std::size_t, std::size_t> sizes;
    for (const auto& o : orb) ++sizes[o.points.size()];
    std::string decomposition;
    for (auto [len, count] : sizes) {
      if (!decomposition.empty()) decomposition += " + ";
      decomposition += len == 1 ? std::to_string(count) : std::to_string(count) + "x" + std::to_string(len);
    }
    text << "group order " << g.order() << "; " << ps.size() << " points = " << decomposition << "\n";
    j["orbits"] = {{"group_order", g.order()}, {"decomposition", decomposition}, {"list", Json::array()}};
    for (const auto& o : orb) {
      text << "  " << o.points.size() << " x " << o.representative.to_string() << " on " << o.multiplicity
           << " lines\n";
      j["orbits"]["list"].push_back(
          {{"representative", o.representative.to_string()}, {"size", o.points.size()}, {"multiplicity", o.multiplicity}});
    }
  }
  if (flags.charpoly) {
    auto cp = char_poly(arr, ps);
    const std::string free = cp.splits ? "not decided" : "no";
    text << "chi: " << cp.cubic_text() << "\n";
    text << "quotient: " << cp.quotient_text() << "; splits/Z: " << (cp.splits ? "yes" : "no") << "; free: " << free
         << "\n";
    text << "ascending reading: " << cp.ascending_text() << " (same constant " << cp.q0
         << " as the quotient; the cubic has linear coefficient " << cp.linear << ")\n";
    j["charpoly"] = {{"cubic", cp.cubic_text()},           {"quotient", cp.quotient_text()},
                     {"ascending", cp.ascending_text()},   {"discriminant", cp.discriminant},
                     {"splits_over_Z", cp.splits},         {"free", cp.splits ? Json(nullptr) : Json(false)}};
  }
  if (flags.verify_tables) {
    if (inst.file || inst.name != "A313") throw ParseError("--verify-tables applies to A313 (the rational line table)");
    auto rep = verify_realization(RationalField{}, fixtures::table1_lines(), fixtures::table2_points(),
                                  expected_t_a31());
    text << rep.matched << "/" << rep.table_points << " points matched; t-vector "
         << (rep.t_vector_matches ? "matches" : "differs") << "\n";
    for (const auto& m : rep.missing) text << "  missing " << m << "\n";
    for (const auto& m : rep.unlisted) text << "  unlisted " << m << "\n";
    for (const auto& m : rep.class_mismatches) text << "  class mismatch " << m << "\n";
    j["verify_tables"] = {{"matched", rep.matched},         {"table_points", rep.table_points},
                          {"computed_points", rep.computed_points}, {"missing", rep.missing},
                          {"unlisted", rep.unlisted},       {"class_mismatches", rep.class_mismatches},
                          {"ok", rep.ok()}};
    if (!rep.ok()) {
      emit(cfg, j, text.str());
      return kFailure;
    }
  }
  emit(cfg, j, text.str());
  return kOk;
}

// ----------------------------------------------------------------- invariants

struct InvariantFlags {
  std::optional<unsigned> molien;
  bool reynolds = false;
  std::optional<std::string> curve;
  bool genus = false;
  std::optional<std::uint64_t> scan_prime;
};

template <CoefficientField F>
int cmd_invariants(const F& field, Model model, const InvariantFlags& flags, const RunConfig& cfg) {
  std::ostringstream text;
  Json j;
  j["field"] = field.tag();
  if (flags.molien) {
    auto g = dihedral_group(field);
    const unsigned d = *flags.molien;
    const auto dim = molien_dimension(g, d);
    text << "molien dimension in degree " << d << ": " << dim << "\n";
    j["molien"] = {{"degree", d}, {"dimension", dim}};
    if (flags.reynolds) {
      const auto rank = reynolds_fixed_dim(g, d);
      text << "reynolds rank in degree " << d << ": " << rank << "\n";
      j["molien"]["reynolds_rank"] = rank;
    }
  }
  if (!flags.curve) {
    if (!flags.molien) throw ParseError("nothing to do: pass --molien or --curve");
    emit(cfg, j, text.str());
    return kOk;
  }
  const CurveName name = parse_curve_name(*flags.curve);
  std::optional<Polynomial<F>> poly;
  if (model == Model::Sqrt3) {
    auto kernel = interpolate_named_curve(name, field);
    if (kernel.empty()) throw EmptyKernel("no curve of degree " + std::to_string(curve_degree(name)) + " through the imposed points");
    const auto& c = kernel.front();
    auto g = dihedral_group(field);
    auto basis = InvariantBasis<F>::standard(field, c.degree);
    auto verification = verify_orbit_vanishing(c, g);
    j["curve_report"] = curve_report_to_json(curve_name(name), basis, kernel, verification);
    text << "curve " << curve_name(name) << ": degree " << c.degree << ", kernel dimension " << kernel.size() << "\n";
    text << "coefficients in the invariant basis (first nonzero normalized to 1):\n";
    for (std::size_t k = 0; k < c.coefficients.size(); ++k)
      text << "  " << basis.label(k) << ": " << element_to_text<F>(c.coefficients[k]) << "\n";
    try {
      auto cmp = compare_coefficients(c, reference_coefficients(name), reference_anchor(name), field);
      text << "reference comparison: " << (c.coefficients.size() - cmp.mismatches.size()) << "/"
           << c.coefficients.size() << " coefficients match after rescaling\n";
      Json mism = Json::array();
      for (auto i : cmp.mismatches) {
        const auto& e = c.exponents[i];
        text << "  mismatch at " << basis.label(i) << ": computed " << element_to_text<F>(cmp.rescaled[i])
             << ", reference " << reference_coefficients(name).at(e).to_string() << "\n";
        mism.push_back({{"term", basis.label(i)},
                        {"computed", element_to_text<F>(cmp.rescaled[i])},
                        {"reference", reference_coefficients(name).at(e).to_string()}});
      }
      j["curve_report"]["reference"] = {{"projective_match", cmp.projective_match}, {"mismatches", mism}};
    } catch (const BadPrime& e) {
      text << "reference comparison skipped: " << e.what() << "\n";
    }
    text << "expanded: " << to_string(c.polynomial) << "\n";
    for (const auto& v : verification)
      text << "orbit of " << v.representative.to_string() << " (" << v.orbit_size << " points): imposed order "
           << v.imposed << ", vanishing order " << v.min_order << "\n";
    poly = c.polynomial;
  } else {
    auto kernel = interpolate_rational_model(name, field);
    if (kernel.empty()) throw EmptyKernel("no curve through the imposed points of the rational model");
    text << "curve " << curve_name(name) << " (rational model): degree " << curve_degree(name)
         << ", kernel dimension " << kernel.size() << "\n";
    text << "expanded: " << to_string(kernel.front()) << "\n";
    j["curve_report"] = {{"curve", curve_name(name)},
                         {"field", field.tag()},
                         {"model", "rational"},
                         {"kernel_dim", kernel.size()},
                         {"degree", curve_degree(name)},
                         {"expanded", to_string(kernel.front())}};
    poly = kernel.front();
  }

  if (flags.genus || flags.scan_prime) {
    Polynomial<PrimeField> fp_poly = [&] {
      if constexpr (std::is_same_v<F, PrimeField>) {
        if (flags.scan_prime && *flags.scan_prime != field.p)
          throw ParseError("--singular-scan prime must equal the field's prime");
        return *poly;
      } else {
        return specialize(*poly, PrimeField(flags.scan_prime.value_or(4093)));
      }
    }();
    const auto p = fp_poly.field().p;
    auto sing = singular_points_scan(fp_poly);
    std::vector<SingularityType> types;
    std::size_t nodes = 0;
    bool ordinary = true;
    Json pts = Json::array();
    for (const auto& s : sing) {
      auto t = classify_singular_point(fp_poly, s);
      types.push_back(t);
      ordinary = ordinary && t.ordinary;
      nodes += t.multiplicity == 2 && t.ordinary;
      pts.push_back({{"point", s.to_string()}, {"multiplicity", t.multiplicity}, {"ordinary", t.ordinary}});
    }
    const bool empty = emptiness_of_singular_locus(fp_poly, cfg.groebner_options("jacobian"));
    text << "singular points mod " << p << ": " << sing.size() << " (" << nodes << " ordinary nodes)\n";
    for (std::size_t k = 0; k < sing.size(); ++k)
      text << "  " << sing[k].to_string() << " multiplicity " << types[k].multiplicity
           << (types[k].ordinary ? " ordinary" : " non-ordinary") << "\n";
    text << "singular locus by radical membership: " << (empty ? "empty" : "nonempty")
         << (empty == sing.empty() ? "" : " (disagrees with the scan over F_p; points may lie in an extension)") << "\n";
    j["singular"] = {{"prime", p}, {"points", pts}, {"radical_membership_empty", empty}};
    if (flags.genus) {
      const unsigned deg = curve_degree(name);
      if (ordinary) {
        const long g = genus_nodal(deg, types);
        text << "degree " << deg << ", " << nodes << " nodes, g=" << g << "\n";
        j["genus"] = g;
      } else {
        text << "degree " << deg << ": genus not computed (non-ordinary singular points)\n";
        j["genus"] = nullptr;
      }
    }
  }
  emit(cfg, j, text.str());
  return kOk;
}

// ---------------------------------------------------------------- containment

struct ContainmentFlags {
  unsigned m = 3;
  unsigned r = 2;
  std::optional<std::string> strategy;
  std::optional<std::uint64_t> prime;
  bool witness_only = false;
};

template <CoefficientField F>
int cmd_containment(const Instance& inst, const F& field, const ContainmentFlags& flags, const RunConfig& cfg) {
  if (flags.m == 0 || flags.r == 0) throw ParseError("--m and --r must be positive");
  auto arr = load_arrangement(inst, field);
  auto pts = intersection_points(arr).points();
  std::optional<FatPointStrategy> strategy;
  if (flags.strategy) strategy = parse_strategy(*flags.strategy);
  VerdictContext ctx;
  ctx.instance = inst.name;
  if constexpr (std::is_same_v<F, PrimeField>) ctx.prime = field.p;
  ctx.model = model_name(inst.model);
  ctx.strategy = strategy ? strategy_name(*strategy) : "default";
  ctx.include_timing = cfg.timing;
  auto opts = cfg.groebner_options(inst.name);
  std::ostringstream text;
  const std::string head = inst.name + " (m=" + std::to_string(flags.m) + ", r=" + std::to_string(flags.r) + ") over " +
                           field.tag() + ": ";

  if (flags.witness_only) {
    auto f = (!inst.file && (inst.name == "A313" || inst.name == "B21")) ? build_witness(inst.name, field, inst.model)
                                                                          : product_of_forms(arr);
    auto w = witness_check(f, pts, flags.m, flags.r, true, strategy, opts);
    auto j = witness_to_json(w, ctx);
    j["field"] = field.tag();
    const bool certified = w.in_symbolic && w.in_power == false;
    text << head << j["label"].template get<std::string>() << "\n";
    text << "witness: degree " << w.degree << ", vanishing order >= " << w.min_order << " at all " << w.points
         << " points" << (w.in_symbolic ? "" : " (NOT in the symbolic power)") << "\n";
    if (w.in_power) {
      text << "normal form modulo I^" << flags.r << ": "
           << (*w.in_power ? "zero (no certificate)"
                           : std::to_string(w.normal_form.terms) + " terms, leading " + w.normal_form.leading_term +
                                 ", hash " + w.normal_form.hash)
           << "\n";
    } else {
      text << "membership undecided: " << w.undecided_reason << "\n";
    }
    if (cfg.timing)
      text << "time: " << w.seconds_pointwise << " s pointwise, " << w.seconds_membership << " s membership\n";
    emit(cfg, j, text.str());
    return certified ? kNonContainment : kUndecided;
  }

  auto v = check_containment(pts, field, flags.m, flags.r, strategy, opts);
  auto j = verdict_to_json(v, ctx);
  text << head << outcome_name(v.outcome) << " [" << j["label"].template get<std::string>() << "]\n";
  text << "I^(" << flags.m << "): " << v.symbolic_generators << " generators, degrees";
  for (auto d : v.symbolic_degrees) text << " " << d;
  text << "\nI^" << flags.r << ": " << v.power_generators << " generators, truncated basis of " << v.basis_size
       << " elements\n";
  if (v.failing_generator)
    text << "certificate: generator " << *v.failing_generator << " of I^(" << flags.m << ") has normal form with "
         << v.normal_form.terms << " terms, leading " << v.normal_form.leading_term << ", hash " << v.normal_form.hash
         << "\n";
  if (v.outcome == Outcome::Undecided)
    text << "undecided: " << v.undecided_reason << " after " << v.stats.pairs_reduced << " pairs\n";
  if (cfg.timing) text << "time: " << v.seconds << " s\n";
  emit(cfg, j, text.str());
  switch (v.outcome) {
    case Outcome::Holds: return kOk;
    case Outcome::Fails: return kNonContainment;
    default: return kUndecided;
  }
}

// --------------------------------------------------------------------- render

struct RenderFlags {
  std::optional<std::string> curve;
  std::optional<std::string> out;
  std::optional<std::string> window;
  unsigned resolution = 400;
};

template <CoefficientField F>
int cmd_render(const Instance& inst, const F& field, const RenderFlags& flags, const RunConfig&) {
  if (!field.is_real()) throw NonRealField(field.tag());
  auto arr = load_arrangement(inst, field);
  auto ps = intersection_points(arr);
  RenderOptions opts;
  opts.resolution = flags.resolution;
  if (flags.window) opts.window = RenderWindow::parse(*flags.window);
  std::optional<Polynomial<F>> curve;
  if (flags.curve) {
    const auto c = parse_curve_name(*flags.curve);
    if (inst.model == Model::Sqrt3) {
      auto k = interpolate_named_curve(c, field);
      if (k.empty()) throw EmptyKernel("no curve through the imposed points");
      curve = k.front().polynomial;
    } else {
      auto k = interpolate_rational_model(c, field);
      if (k.empty()) throw EmptyKernel("no curve through the imposed points");
      curve = k.front();
    }
  }
  RenderSummary sum;
  auto svg = render_svg(arr, ps, curve ? &*curve : nullptr, opts, &sum);
  std::ostream* summary_stream = &std::cerr;
  if (flags.out) {
    std::ofstream f(*flags.out, std::ios::binary);
    if (!f) throw Error("cannot write " + *flags.out);
    f << svg;
    summary_stream = &std::cout;
  } else {
    std::cout << svg;
  }
  *summary_stream << sum.strokes << " line strokes";
  if (sum.omitted_lines) *summary_stream << " (line at infinity z=0 omitted)";
  *summary_stream << ", " << sum.vertices << (sum.vertices == 1 ? " vertex" : " vertices");
  if (sum.vertices_at_infinity) *summary_stream << " (" << sum.vertices_at_infinity << " more at infinity)";
  if (curve) *summary_stream << ", degree-" << curve->degree() << " contour over " << sum.contour_cells << " cells";
  *summary_stream << "\n";
  return kOk;
}

// ------------------------------------------------------------------- groebner

template <CoefficientField F>
int cmd_groebner(const Json& file, const F& field, const RunConfig& cfg) {
  auto ideal = ideal_from_json(file, field);
  auto gb = groebner_basis(ideal, MonomialOrder::parse(cfg.order), cfg.groebner_options("groebner"));
  auto j = ideal_to_json(gb, true);
  std::ostringstream text;
  text << "reduced basis (" << cfg.order << "), " << gb.basis().elements.size() << " elements:\n";
  for (const auto& g : gb.basis().elements) text << "  " << to_string(g) << "\n";
  emit(cfg, j, text.str());
  return kOk;
}

// --------------------------------------------------------------------- oracle

template <CoefficientField F>
int cmd_oracle(const F& field, unsigned schemes, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  auto ring = plane_ring(field);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_int_distribution<unsigned> mult(1, 3);
  std::uniform_int_distribution<long> coord(-5, 5);
  unsigned agree = 0;
  Json list = Json::array();
  std::ostringstream text;
  for (unsigned k = 0; k < schemes; ++k) {
    std::vector<ProjectivePoint<F>> pts;
    const std::size_t n = count(rng);
    while (pts.size() < n) {
      long a = coord(rng), b = coord(rng), c = coord(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      ProjectivePoint<F> p(from_int(field, a), from_int(field, b), from_int(field, c));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<unsigned> ms;
    for (std::size_t i = 0; i < n; ++i) ms.push_back(mult(rng));
    FatPointScheme<F> s(field, pts, ms);
    auto opts = cfg.groebner_options("oracle");
    auto a = groebner_basis(fat_points_ideal(s, ring, FatPointStrategy::Intersection, opts)).basis().elements;
    auto b = groebner_basis(fat_points_ideal(s, ring, FatPointStrategy::Interpolation, opts)).basis().elements;
    const bool same = a == b;
    agree += same;
    text << "scheme " << k << ": " << n << " points, multiplicities";
    for (auto m : ms) text << " " << m;
    text << ": " << (same ? "agree" : "DIFFER") << " (" << a.size() << " basis elements)\n";
    list.push_back({{"points", n}, {"multiplicities", ms}, {"agree", same}, {"basis_size", a.size()}});
  }
  text << agree << "/" << schemes << " schemes agree\n";
  emit(cfg, {{"field", field.tag()}, {"seed", cfg.seed}, {"schemes", list}, {"agree", agree}}, text.str());
  return agree == schemes ? kOk : kFailure;
}

int run(int argc, char** argv) {
  CLI::App app{"idealis: line arrangements, invariant curves and containment of symbolic powers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "field selector: q, fp:<p> or qsqrt:<d> (default depends on the instance)");
  app.add_option("--model", cfg.model, "arrangement model: sqrt3 or rational")->check(CLI::IsMember({"sqrt3", "rational"}));
  app.add_option("--order", cfg.order, "monomial order for ideal files: degrevlex or lex");
  app.add_option("--max-pairs", cfg.max_pairs, "cap on S-pairs before giving up");
  app.add_option("--max-terms", cfg.max_terms, "cap on stored terms before giving up");
  app.add_option("--time-budget", cfg.time_budget, "wall-time budget in seconds for Groebner runs");
  app.add_option("--seed", cfg.seed, "seed for randomized subcommands");
  app.add_flag("--json", cfg.json, "machine-readable JSON on stdout");
  app.add_flag("--timing", cfg.timing, "include wall times (reports are otherwise byte-identical across runs)");
  app.add_flag("--quiet", cfg.quiet, "no progress lines on stderr");
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (overrides IDEALIS_THREADS)");

  auto* arr_cmd = app.add_subcommand("arrangement", "t-vector, points, orbits, characteristic polynomial");
  std::string arr_name;
  ArrangementFlags af;
  arr_cmd->add_option("instance", arr_name, "named arrangement or JSON file")->required();
  arr_cmd->add_flag("--t-vector", af.t_vector);
  arr_cmd->add_flag("--points", af.points);
  arr_cmd->add_flag("--orbits", af.orbits);
  arr_cmd->add_flag("--charpoly", af.charpoly);
  arr_cmd->add_flag("--verify-tables", af.verify_tables);
  arr_cmd->add_flag("--dump", af.dump, "print the arrangement file");

  auto* inv_cmd = app.add_subcommand("invariants", "Molien dimensions, invariant curves, singular points, genus");
  InvariantFlags inf;
  inv_cmd->add_option("--molien", inf.molien, "degree");
  inv_cmd->add_flag("--reynolds", inf.reynolds, "also compute the Reynolds projector rank");
  inv_cmd->add_option("--curve", inf.curve, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  inv_cmd->add_flag("--genus", inf.genus);
  inv_cmd->add_option("--singular-scan", inf.scan_prime, "prime p <= 4096 for the brute-force scan");

  auto* con_cmd = app.add_subcommand("containment", "decide I^(m) in I^r for the points of an arrangement");
  std::string con_name;
  ContainmentFlags cf;
  con_cmd->add_option("instance", con_name, "named arrangement or JSON file")->required();
  con_cmd->add_option("--m", cf.m);
  con_cmd->add_option("--r", cf.r);
  con_cmd->add_option("--strategy", cf.strategy, "intersection or interpolation");
  con_cmd->add_option("--prime", cf.prime, "work over F_p");
  con_cmd->add_flag("--witness-only", cf.witness_only, "test only the witness polynomial");

  auto* ren_cmd = app.add_subcommand("render", "SVG picture of the affine part z=1");
  std::string ren_name;
  RenderFlags rf;
  ren_cmd->add_option("instance", ren_name, "named arrangement or JSON file")->required();
  ren_cmd->add_option("--curve", rf.curve, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  ren_cmd->add_option("--out", rf.out, "output file (default stdout)");
  ren_cmd->add_option("--window", rf.window, "x0,x1,y0,y1");
  ren_cmd->add_option("--resolution", rf.resolution, "grid columns")->check(CLI::Range(16u, 4000u));

  auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
  std::string gb_file;
  gb_cmd->add_option("file", gb_file, "ideal JSON file")->required();

  auto* orc_cmd = app.add_subcommand("oracle", "compare the fat point strategies on random schemes");
  unsigned schemes = 10;
  orc_cmd->add_option("--schemes", schemes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (threads > 0) setenv("IDEALIS_THREADS", std::to_string(threads).c_str(), 1);
  configure_threads_from_env();

  if (arr_cmd->parsed()) {
    auto inst = resolve_instance(arr_name, cfg);
    return std::visit([&](const auto& f) { return cmd_arrangement(inst, f, af, cfg); }, inst.field);
  }
  if (inv_cmd->parsed()) {
    const AnyField field = parse_field(cfg.field.empty() ? (cfg.model == "rational" ? "fp:4093" : "qsqrt:3") : cfg.field);
    const Model model = parse_model(cfg.model);
    return std::visit([&](const auto& f) { return cmd_invariants(f, model, inf, cfg); }, field);
  }
  if (con_cmd->parsed()) {
    RunConfig c = cfg;
    if (cf.prime) {
      if (!c.field.empty() && c.field != "fp:" + std::to_string(*cf.prime))
        throw ParseError("--prime and --field disagree");
      c.field = "fp:" + std::to_string(*cf.prime);
    }
    auto inst = resolve_instance(con_name, c);
    return std::visit([&](const auto& f) { return cmd_containment(inst, f, cf, c); }, inst.field);
  }
  if (ren_cmd->parsed()) {
    auto inst = resolve_instance(ren_name, cfg);
    return std::visit([&](const auto& f) { return cmd_render(inst, f, rf, cfg); }, inst.field);
  }
  if (gb_cmd->parsed()) {
    auto file = read_json_file(gb_file);
    std::string tag;
    try {
      tag = file.at("ring").at("field").get<std::string>();
    } catch (const Json::exception& e) {
      throw ParseError(std::string("malformed ideal file: ") + e.what());
    }
    return std::visit([&](const auto& f) { return cmd_groebner(file, f, cfg); }, parse_field(tag));
  }
  if (orc_cmd->parsed()) {
    return std::visit([&](const auto& f) { return cmd_oracle(f, schemes, cfg); },
                      parse_field(cfg.field.empty() ? "fp:31" : cfg.field));
  }
  return kParse;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const BadPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedFieldForModel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsupportedModel;
  } catch (const EmptyKernel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEmptyKernel;
  } catch (const NonRealField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonReal;
  } catch (const ResourceLimit& e) {
    std::cerr << "undecided: " << e.what() << " after " << e.stats().pairs_reduced << " pairs\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
