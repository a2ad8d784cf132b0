// Acceptance runner: one PASS/FAIL line per criterion, exact equality only.
//
//   acceptance                 criteria 1..11
//   acceptance --criterion 7   a single criterion
//   acceptance --long          also criterion 12 (hours; modular verdicts)
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "idealis/containment/verdict.hpp"
#include "idealis/algebra/operations.hpp"
#include "idealis/invariant/singular.hpp"

using namespace idealis;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  // Records a sub-check; the criterion passes only if all of them do.
  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Result()> run;
};

const QuadraticField K3(3);

template <class F>
std::string tv_text(const PointSet<F>& ps) {
  return t_vector_text(t_vector(ps)) + ", " + std::to_string(ps.size()) + " points";
}

Result combinatorics() {
  Result o;
  for (const char* name : {"A313", "A312"}) {
    auto ps = intersection_points(build_named(name, Model::Sqrt3, K3));
    o.check(t_vector(ps) == expected_t_a31() && ps.size() == 127, std::string(name) + ": " + tv_text(ps));
  }
  auto b = intersection_points(build_named("B21", Model::Sqrt3, K3));
  o.check(t_vector(b) == expected_t_b21() && b.size() == 115, "B21: " + tv_text(b));
  return o;
}

Result orbit_structure() {
  Result o;
  auto g = dihedral_group(K3);
  o.check(g.order() == 12, "group order " + std::to_string(g.order()));
  auto a = intersection_points(build_named("A313", Model::Sqrt3, K3));
  auto orb = orbits(g, a);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& x : orb) ++sizes[x.points.size()];
  std::string text;
  for (auto [len, count] : sizes) {
    if (!text.empty()) text += " + ";
    text += len == 1 && count == 1 ? "1" : std::to_string(count) + "x" + std::to_string(len);
  }
  // Three of the listed six-point orbits are at infinity, where the central
  // element A^3 acts trivially: two of them split into orbits of size 3.
  const std::map<std::size_t, std::size_t> listed{{1, 1}, {6, 9}, {12, 6}};
  o.check(sizes == listed, "orbit decomposition " + text + " (listed: 1 + 9x6 + 6x12)");
  const ProjectivePoint<QuadraticField> origin(K3.zero(), K3.zero(), K3.one());
  o.check(orb.front().points.size() == 1 && orb.front().representative == origin, "fixed point (0:0:1)");
  auto b = intersection_points(build_named("B21", Model::Sqrt3, K3));
  std::vector<ProjectivePoint<QuadraticField>> diff;
  for (const auto& e : a.entries()) {
    if (!b.contains(e.point)) diff.push_back(e.point);
  }
  o.check(diff == orbit_of(g, distinguished_orbit_point(K3)),
          "A313 \\ B21 is the orbit of (9:2u:4u), " + std::to_string(diff.size()) + " points");
  return o;
}

Result f10_expansion() {
  Result o;
  auto ring = plane_ring(K3);
  auto f10 = product_of_forms(build_named("initial10_A313", Model::Sqrt3, K3), ring);
  auto displayed = parse_polynomial(
      "x^7*y^3-x^7*y*z^2-63/4*x^5*y^3*z^2+63/4*x^5*y*z^4+189/4*x^3*y^3*z^4-189/4*x^3*y*z^6-27*x*y^3*z^6+27*x*y*z^8",
      ring);
  o.check(f10 == displayed, std::to_string(f10.size()) + " terms, equal to the displayed expansion");
  return o;
}

Result molien() {
  Result o;
  auto g = dihedral_group(K3);
  const auto d12 = molien_dimension(g, 12);
  const auto d10 = molien_dimension(g, 10);
  o.check(d12 == 12, "dim at d=12: " + std::to_string(d12));
  o.check(d10 == 9, "dim at d=10: " + std::to_string(d10));
  unsigned agree = 0;
  for (unsigned d = 0; d <= 12; ++d) agree += molien_dimension(g, d) == reynolds_fixed_dim(g, d);
  o.check(agree == 13, "Reynolds rank agrees for " + std::to_string(agree) + "/13 degrees");
  return o;
}

Result interpolation() {
  Result o;
  for (auto c : {CurveName::Gamma, CurveName::Delta}) {
    auto k = interpolate_named_curve(c, K3);
    o.check(k.size() == 1, curve_name(c) + " kernel dimension " + std::to_string(k.size()));
    if (k.size() != 1) continue;
    auto cmp = compare_coefficients(k.front(), reference_coefficients(c), reference_anchor(c), K3);
    std::string what = curve_name(c) + ": " + std::to_string(k.front().coefficients.size() - cmp.mismatches.size()) +
                       "/" + std::to_string(k.front().coefficients.size()) + " coefficients match";
    for (auto i : cmp.mismatches) {
      const auto& e = k.front().exponents[i];
      what += ", f1^" + std::to_string(e[0]) + " f2^" + std::to_string(e[1]) + " f3^" + std::to_string(e[2]) +
              " computed " + element_to_text<QuadraticField>(cmp.rescaled[i]) + " vs listed " +
              reference_coefficients(c).at(e).to_string();
    }
    o.check(cmp.projective_match && cmp.mismatches.empty() && cmp.missing.empty(), what);
  }
  return o;
}

Result witness_vanishing() {
  Result o;
  for (const char* name : {"A313", "B21"}) {
    auto f = build_witness(name, K3);
    auto pts = instance_points(name, K3);
    auto w = witness_check(f, pts, 3, 2, false);
    o.check(w.in_symbolic, std::string(name) + ": degree " + std::to_string(w.degree) + ", order >= " +
                               std::to_string(w.min_order) + " at all " + std::to_string(w.points) + " points");
  }
  return o;
}

Result dual_hesse() {
  Result o;
  const PrimeField f7(7);
  auto arr = build_named("dualHesse", Model::Sqrt3, f7);
  auto pts = intersection_points(arr).points();
  auto ring = plane_ring(f7);
  auto f = product_of_forms(arr, ring);
  auto w = witness_check(f, pts, 3, 2);
  o.check(w.in_symbolic, "product of 9 lines vanishes to order 3 at the 12 points");
  o.check(w.in_power == false, "product of 9 lines has nonzero normal form modulo I^2");
  auto v = check_containment(pts, f7, 3, 2);
  o.check(v.outcome == Outcome::Fails, "check_containment(3,2): " + outcome_name(v.outcome));
  return o;
}

// Hand-rolled random schemes with fixed seeds.
template <CoefficientField F, class Draw>
std::vector<ProjectivePoint<F>> random_points(std::mt19937_64& rng, std::size_t n, Draw draw) {
  std::vector<ProjectivePoint<F>> pts;
  while (pts.size() < n) {
    auto a = draw(rng), b = draw(rng), c = draw(rng);
    if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
    ProjectivePoint<F> p(a, b, c);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

Rational small_rational(std::mt19937_64& rng) {
  return Rational(mpz_class(std::uniform_int_distribution<long>(-5, 5)(rng)));
}

Result els_sanity() {
  Result o;
  const PrimeField f7(7);
  auto pts = intersection_points(build_named("dualHesse", Model::Sqrt3, f7)).points();
  auto v = check_containment(pts, f7, 4, 2);
  o.check(v.holds(), "dual Hesse (4,2): " + outcome_name(v.outcome));
  std::mt19937_64 rng(4242);
  RationalField q;
  for (int trial = 0; trial < 3; ++trial) {
    auto s = random_points<RationalField>(rng, 5, small_rational);
    auto r = check_containment(s, q, 4, 2);
    o.check(r.holds(), "random 5 points #" + std::to_string(trial + 1) + " (4,2): " + outcome_name(r.outcome));
  }
  return o;
}

Result strategy_equivalence() {
  Result o;
  std::mt19937_64 rng(9090);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  std::uniform_int_distribution<unsigned> mult(1, 3);
  unsigned agree = 0, total = 0;
  auto run = [&](const auto& field, auto draw) {
    using F = std::decay_t<decltype(field)>;
    auto ring = plane_ring(field);
    auto pts = random_points<F>(rng, count(rng), draw);
    std::vector<unsigned> ms;
    for (std::size_t i = 0; i < pts.size(); ++i) ms.push_back(mult(rng));
    FatPointScheme<F> s(field, pts, ms);
    auto a = groebner_basis(fat_points_ideal(s, ring, FatPointStrategy::Intersection)).basis().elements;
    auto b = groebner_basis(fat_points_ideal(s, ring, FatPointStrategy::Interpolation)).basis().elements;
    ++total;
    agree += a == b;
  };
  const PrimeField f31(31);
  auto residue = [&](std::mt19937_64& g) { return Residue(std::uniform_int_distribution<std::uint64_t>(0, 30)(g), 31); };
  for (int k = 0; k < 10; ++k) run(RationalField{}, small_rational);
  for (int k = 0; k < 10; ++k) run(f31, residue);
  o.check(agree == total, "identical reduced bases on " + std::to_string(agree) + "/" + std::to_string(total) +
                              " schemes (10 over Q, 10 over F31)");
  return o;
}

Result char_poly_and_genus() {
  Result o;
  auto cp = char_poly(build_named("B21", Model::Sqrt3, K3));
  o.check(cp.quotient_text() == "t^2-20t+141", "quotient " + cp.quotient_text());
  o.check(!cp.splits, std::string("splits over Z: ") + (cp.splits ? "yes" : "no") + "; free: " +
                          (cp.splits ? "undecided" : "no"));
  auto g = genus_nodal(12, std::vector<SingularityType>(12, {2, true}));
  o.check(g == 43, "genus_nodal(12, 12 nodes) = " + std::to_string(g));
  return o;
}

Result singular_locus() {
  Result o;
  constexpr std::uint64_t p = 4093;  // 1 mod 12
  const PrimeField fp(p);
  auto gamma = specialize(interpolate_named_curve(CurveName::Gamma, K3).front().polynomial, fp);
  auto sing = singular_points_scan(gamma);
  std::vector<ProjectivePoint<PrimeField>> orbit;
  for (const auto& q : orbit_of(dihedral_group(K3), distinguished_orbit_point(K3)))
    orbit.emplace_back(specialize_element(q[0], fp), specialize_element(q[1], fp), specialize_element(q[2], fp));
  std::sort(orbit.begin(), orbit.end());
  o.check(sing == orbit, "gamma mod " + std::to_string(p) + ": " + std::to_string(sing.size()) +
                             " singular points, equal to the 12-point orbit");
  auto delta = specialize(interpolate_named_curve(CurveName::Delta, K3).front().polynomial, fp);
  auto dsing = singular_points_scan(delta);
  const bool empty = emptiness_of_singular_locus(delta);
  std::string found;
  for (const auto& s : dsing) found += " " + s.to_string();
  o.check(empty == dsing.empty(), "delta mod " + std::to_string(p) + ": scan finds " + std::to_string(dsing.size()) +
                                      " singular points" + found + ", emptiness verdict " +
                                      (empty ? "empty" : "nonempty") + " (claims: smooth / four points; neither)");
  return o;
}

// Membership of a homogeneous f in I by rank of the degree-d piece, without
// Groebner bases.
template <CoefficientField F>
bool graded_membership(const Polynomial<F>& f, const Ideal<F>& ideal) {
  const auto d = static_cast<unsigned>(f.degree());
  auto piece = graded_piece(ideal, d);
  auto with_f = ideal.generators();
  with_f.push_back(f);
  return graded_piece(Ideal<F>(ideal.ring(), std::move(with_f)), d).dimension == piece.dimension;
}

GroebnerOptions progress_options(const std::string& label) {
  GroebnerOptions opts;
  opts.progress_interval = 2000;
  opts.progress = [label](const GroebnerStats& s) {
    std::cerr << "[" << label << "] pairs " << s.pairs_reduced << ", queue " << s.max_queue << ", basis "
              << s.basis_size << ", sugar " << s.max_sugar << std::endl;
  };
  return opts;
}

Result modular_verdicts() {
  Result o;
  const PrimeField fp(65521);
  for (const char* name : {"A313", "B21"}) {
    auto f = build_witness(name, fp, Model::RationalTable1);
    auto pts = instance_points(name, fp, Model::RationalTable1);
    auto w = witness_check(f, pts, 3, 2, true, std::nullopt, progress_options(name));
    std::ostringstream what;
    what << name << " witness (degree " << w.degree << ", " << w.points << " points): ";
    if (!w.in_power)
      what << "undecided, " << w.undecided_reason;
    else
      what << (*w.in_power ? "normal form zero" : "nonzero normal form " + w.normal_form.hash) << " in "
           << w.seconds_membership << " s";
    o.check(w.in_symbolic && w.in_power == false, what.str());
    auto square = ideal_power(symbolic_power(pts, f.ring(), 1), 2);
    o.check(!graded_membership(f, square), std::string(name) + " witness outside I^2 by graded rank");
  }
  auto pts = instance_points("A312", fp);
  auto v = check_containment(pts, fp, 3, 2, std::nullopt, progress_options("A312"));
  o.check(v.holds(), "A312 (3,2) mod 65521: " + outcome_name(v.outcome) + " in " + std::to_string(v.seconds) + " s");
  auto ring = plane_ring(fp);
  auto sym = symbolic_power(pts, ring, 3);
  auto square = ideal_power(symbolic_power(pts, ring, 1), 2);
  std::size_t inside = 0;
  for (const auto& g : sym.generators()) inside += graded_membership(g, square);
  o.check(inside == sym.generators().size(), "A312: " + std::to_string(inside) + "/" +
                                                 std::to_string(sym.generators().size()) +
                                                 " generators of I^(3) in I^2 by graded rank");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  bool long_run = false;
  app.add_option("--criterion", only, "run only these criteria");
  app.add_flag("--long", long_run, "include the long modular criterion 12");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("IDEALIS_LONG_TESTS"); env && std::string(env) == "1") long_run = true;
  configure_threads_from_env();

  const std::vector<Criterion> all{
      {1, "t-vectors of A313, A312, B21", 1, combinatorics},
      {2, "orbits of the dihedral group", 1, orbit_structure},
      {3, "expansion of the ten initial lines", 0.1, f10_expansion},
      {4, "Molien dimensions and Reynolds ranks", 5, molien},
      {5, "gamma and delta interpolation", 30, interpolation},
      {6, "witnesses vanish to order 3", 60, witness_vanishing},
      {7, "dual Hesse non-containment over F7", 60, dual_hesse},
      {8, "I^(4) in I^2 sanity", 300, els_sanity},
      {9, "fat point strategies agree", 300, strategy_equivalence},
      {10, "characteristic polynomial of B21, genus", 1, char_poly_and_genus},
      {11, "singular locus by brute-force scan", 600, singular_locus},
      {12, "modular verdicts at p = 65521", 12 * 3600, modular_verdicts},
  };

  int failures = 0;
  for (const auto& c : all) {
    const bool selected = only.empty() ? (c.id != 12 || long_run)
                                       : std::find(only.begin(), only.end(), c.id) != only.end();
    if (!selected) continue;
    if (c.id == 12 && !long_run) {
      std::cout << "criterion 12: SKIP " << c.title << " (pass --long or set IDEALIS_LONG_TESTS=1)" << std::endl;
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3f s, budget %g s", secs, c.budget_seconds);
    o.check(secs < c.budget_seconds, timing);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS " : "FAIL ") << c.title << " [" << o.detail << "]"
              << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
