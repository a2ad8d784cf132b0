// Serial reference vs OpenMP kernels on the same inputs. Each pair is checked
// for identical output before timings are reported.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "idealis/algebra/operations.hpp"
#include "idealis/containment/verdict.hpp"
#include "idealis/invariant/singular.hpp"
#include "idealis/kernels/parallel.hpp"

using namespace idealis;

namespace {

double median_seconds(const std::function<void()>& run, int reps) {
  std::vector<double> t;
  for (int k = 0; k < reps; ++k) {
    auto start = std::chrono::steady_clock::now();
    run();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

struct Kernel {
  std::string name;
  std::function<void(Execution)> run;
  std::function<bool()> same;  // serial and parallel outputs agree
};

template <CoefficientField F>
bool same_points(const PointSet<F>& a, const PointSet<F>& b) {
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const auto &x = a.entries()[k], &y = b.entries()[k];
    if (!(x.point == y.point) || x.multiplicity != y.multiplicity || x.lines != y.lines) return false;
  }
  return true;
}

template <CoefficientField F>
bool same_matrix(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel timings"};
  int reps = 3;
  int threads = 0;
  app.add_option("--reps", reps, "repetitions per kernel (median reported)")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP thread cap (default: IDEALIS_THREADS or all cores)");
  CLI11_PARSE(app, argc, argv);
  int nthreads = configure_threads_from_env();
  if (threads > 0) {
    setenv("IDEALIS_THREADS", std::to_string(threads).c_str(), 1);
    nthreads = configure_threads_from_env();
  }

  const QuadraticField k3(3);
  const PrimeField fp(65521);
  const PrimeField f4093(4093);

  auto a313 = build_named("A313", Model::Sqrt3, k3);
  auto a313p = build_named("A313", Model::RationalTable1, fp);
  auto pts = intersection_points(a313p).points();
  auto ring = plane_ring(fp);
  auto monos = monomials_of_degree(*ring, 33);
  const std::vector<unsigned> mults(pts.size(), 3);
  auto conditions = fat_point_conditions(fp, std::span<const Monomial>(monos),
                                         std::span<const ProjectivePoint<PrimeField>>(pts), mults, Execution::Serial);
  auto gamma = specialize(interpolate_named_curve(CurveName::Gamma, k3).front().polynomial, f4093);
  auto square = ideal_power(symbolic_power(pts, ring, 1), 2);

  std::vector<Kernel> kernels;
  kernels.push_back({"intersection_points A313 over Q(sqrt3)",
                     [&](Execution e) { (void)intersection_points(a313, e); },
                     [&] { return same_points(intersection_points(a313, Execution::Serial),
                                              intersection_points(a313, Execution::Parallel)); }});
  auto conds = [&](Execution e) {
    return fat_point_conditions(fp, std::span<const Monomial>(monos),
                                std::span<const ProjectivePoint<PrimeField>>(pts), mults, e);
  };
  kernels.push_back({"fat_point_conditions 127 pts, m=3, d=33, F_65521", [&](Execution e) { (void)conds(e); },
                     [&] { return same_matrix(conds(Execution::Serial), conds(Execution::Parallel)); }});
  auto reduce = [&](Execution e) {
    auto m = conditions;
    auto piv = rref(m, e);
    return std::make_pair(m, piv);
  };
  kernels.push_back({"rref of those conditions", [&](Execution e) { (void)reduce(e); },
                     [&] {
                       auto a = reduce(Execution::Serial), b = reduce(Execution::Parallel);
                       return a.second == b.second && same_matrix(a.first, b.first);
                     }});
  kernels.push_back({"graded_piece of I^2 at d=31, A313 mod 65521",
                     [&](Execution e) { (void)graded_piece(square, 31, e); },
                     [&] {
                       auto a = graded_piece(square, 31, Execution::Serial);
                       auto b = graded_piece(square, 31, Execution::Parallel);
                       return a.dimension == b.dimension && a.basis == b.basis;
                     }});
  kernels.push_back({"singular_points_scan gamma mod 4093",
                     [&](Execution e) { (void)singular_points_scan(gamma, 4096, e); },
                     [&] { return singular_points_scan(gamma, 4096, Execution::Serial) ==
                                  singular_points_scan(gamma, 4096, Execution::Parallel); }});

  std::printf("threads: %d, repetitions: %d\n", nthreads, reps);
  std::printf("%-50s %10s %10s %8s %s\n", "kernel", "serial s", "omp s", "speedup", "agree");
  bool all_same = true;
  for (const auto& k : kernels) {
    const bool same = k.same();
    all_same = all_same && same;
    const double s = median_seconds([&] { k.run(Execution::Serial); }, reps);
    const double p = median_seconds([&] { k.run(Execution::Parallel); }, reps);
    std::printf("%-50s %10.3f %10.3f %7.2fx %s\n", k.name.c_str(), s, p, s / p, same ? "yes" : "NO");
    std::fflush(stdout);
  }
  return all_same ? 0 : 1;
}
