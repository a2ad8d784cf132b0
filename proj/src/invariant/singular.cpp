#include "idealis/invariant/singular.hpp"

#include <algorithm>

namespace idealis {

namespace {

struct WordTerm {
  unsigned e[3];
  std::uint64_t c;
};

std::vector<WordTerm> word_terms(const Polynomial<PrimeField>& f) {
  std::vector<WordTerm> out;
  for (const auto& t : f.terms()) out.push_back({{t.mono[0], t.mono[1], t.mono[2]}, t.coeff.value()});
  return out;
}

std::uint64_t power(std::uint64_t b, unsigned e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

std::uint64_t eval(const std::vector<WordTerm>& f, const std::uint64_t pt[3], std::uint64_t p) {
  std::uint64_t s = 0;
  for (const auto& t : f) {
    std::uint64_t v = t.c;
    for (int i = 0; i < 3; ++i) v = v * power(pt[i], t.e[i], p) % p;
    s = (s + v) % p;
  }
  return s;
}

// Coefficients of z^k in f(x0, y0, z).
void restrict_to_line(const std::vector<WordTerm>& f, std::uint64_t x0, std::uint64_t y0, std::uint64_t p,
                      std::vector<std::uint64_t>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (const auto& t : f) {
    std::uint64_t v = t.c * power(x0, t.e[0], p) % p * power(y0, t.e[1], p) % p;
    out[t.e[2]] = (out[t.e[2]] + v) % p;
  }
}

}  // namespace

std::vector<ProjectivePoint<PrimeField>> singular_points_scan(const Polynomial<PrimeField>& f,
                                                             std::uint64_t max_prime, Execution exec) {
  const std::uint64_t p = f.field().p;
  if (p > max_prime)
    throw PrimeTooLarge("scan of P^2(F_" + std::to_string(p) + ") exceeds the limit " + std::to_string(max_prime));
  if (!f.is_homogeneous() || f.is_zero()) throw Error("singular-point scan needs a nonzero homogeneous polynomial");
  const auto F0 = word_terms(f);
  const std::vector<std::vector<WordTerm>> partials{word_terms(f.derivative(0)), word_terms(f.derivative(1)),
                                                    word_terms(f.derivative(2))};
  const unsigned d = static_cast<unsigned>(f.degree());

  auto singular_at = [&](const std::uint64_t pt[3]) {
    for (const auto& g : partials) {
      if (eval(g, pt, p) != 0) return false;
    }
    return true;
  };
  // Walks the line (x0 : y0 : z), z in F_p, collecting singular points.
  auto scan_line = [&](std::uint64_t x0, std::uint64_t y0, std::vector<std::array<std::uint64_t, 3>>& hits) {
    std::vector<std::uint64_t> coeffs(d + 1);
    restrict_to_line(F0, x0, y0, p, coeffs);
    for (std::uint64_t z = 0; z < p; ++z) {
      std::uint64_t v = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) v = (v * z + coeffs[k]) % p;
      if (v != 0) continue;
      const std::uint64_t pt[3] = {x0, y0, z};
      if (singular_at(pt)) hits.push_back({x0, y0, z});
    }
  };

  std::vector<std::array<std::uint64_t, 3>> hits;
  const auto rows = static_cast<std::ptrdiff_t>(p);
  const bool parallel = exec == Execution::Parallel;
#pragma omp parallel if (parallel)
  {
    std::vector<std::array<std::uint64_t, 3>> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::ptrdiff_t y = 0; y < rows; ++y) scan_line(1, static_cast<std::uint64_t>(y), local);
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  scan_line(0, 1, hits);
  const std::uint64_t apex[3] = {0, 0, 1};
  if (eval(F0, apex, p) == 0 && singular_at(apex)) hits.push_back({0, 0, 1});

  PrimeField field(p);
  std::vector<ProjectivePoint<PrimeField>> out;
  for (const auto& h : hits) out.emplace_back(Residue(h[0], p), Residue(h[1], p), Residue(h[2], p));
  std::sort(out.begin(), out.end());
  return out;
}

long genus_nodal(unsigned degree, const std::vector<SingularityType>& singular) {
  if (degree == 0) throw Error("degree must be positive");
  long d = degree;
  long g = (d - 1) * (d - 2) / 2;
  for (const auto& s : singular) {
    if (!s.ordinary) throw NonOrdinaryUnsupported();
    g -= static_cast<long>(s.multiplicity) * (s.multiplicity - 1) / 2;
  }
  return g;
}

}  // namespace idealis
