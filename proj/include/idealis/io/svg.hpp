#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "idealis/arrangement/arrangement.hpp"
#include "idealis/kernels/parallel.hpp"

namespace idealis {

class NonRealField : public Error {
 public:
  explicit NonRealField(const std::string& field) : Error("cannot draw over the non-real field " + field) {}
};

/// Affine window [x0, x1] x [y0, y1] of the chart z = 1, with exact corners.
struct RenderWindow {
  Rational x0, x1, y0, y1;

  /// "x0,x1,y0,y1" with rational entries.
  static RenderWindow parse(std::string_view text);
};

struct RenderOptions {
  std::optional<RenderWindow> window;  // default: fit the affine intersection points
  unsigned resolution = 400;            // grid columns; rows follow the aspect ratio
};

/// Counts reported alongside the picture.
struct RenderSummary {
  std::size_t strokes = 0;
  std::size_t omitted_lines = 0;  // the line at infinity, if present
  std::size_t vertices = 0;
  std::size_t vertices_at_infinity = 0;
  std::size_t contour_cells = 0;
  RenderWindow window;
};

namespace detail {

inline int exact_sign(const Rational& a) { return a.sign(); }
inline int exact_sign(const Quadratic& a) { return a.sign(); }
inline int exact_sign(const Residue&) { throw Error("residues have no sign"); }

inline double to_double(const Rational& a) { return a.to_double(); }
inline double to_double(const Quadratic& a) { return a.to_double(); }
inline double to_double(const Residue&) { throw Error("residues have no real value"); }

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

/// Snaps a bound outward to a multiple of 1/4.
inline Rational snap(double v, bool up) {
  long q = static_cast<long>(up ? std::ceil(v * 4) : std::floor(v * 4));
  return Rational(mpz_class(q), mpz_class(4));
}

}  // namespace detail

/// Draws the affine part (z = 1) of an arrangement: lines as dashed strokes,
/// affine intersection points as discs sized by multiplicity, and optionally
/// the real curve f = 0 as the cells where f changes sign between adjacent
/// grid points along a row or a column. Signs come from exact evaluation.
template <CoefficientField F>
std::string render_svg(const Arrangement<F>& arr, const PointSet<F>& points, const Polynomial<F>* curve,
                       const RenderOptions& opts, RenderSummary* summary = nullptr) {
  using Element = typename F::Element;
  const F& field = arr.field();
  if (!field.is_real()) throw NonRealField(field.tag());
  RenderSummary sum;

  // Window: the affine points with a margin, or the requested one.
  if (opts.window) {
    sum.window = *opts.window;
  } else {
    double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
    for (const auto& e : points.entries()) {
      if (e.point[2].is_zero()) continue;
      double x = detail::to_double(e.point[0] / e.point[2]);
      double y = detail::to_double(e.point[1] / e.point[2]);
      lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
    const double mx = 0.1 * (hi_x - lo_x), my = 0.1 * (hi_y - lo_y);
    sum.window = {detail::snap(lo_x - mx, false), detail::snap(hi_x + mx, true), detail::snap(lo_y - my, false),
                  detail::snap(hi_y + my, true)};
  }
  const auto& w = sum.window;
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw Error("empty render window");
  const unsigned cols = std::max(16u, opts.resolution);
  const double wx0 = w.x0.to_double(), wx1 = w.x1.to_double(), wy0 = w.y0.to_double(), wy1 = w.y1.to_double();
  const auto rows = static_cast<unsigned>(std::max(16.0, std::round(cols * (wy1 - wy0) / (wx1 - wx0))));
  auto px = [&](double x) { return (x - wx0) / (wx1 - wx0) * cols; };
  auto py = [&](double y) { return (wy1 - y) / (wy1 - wy0) * rows; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols << "\" height=\"" << rows << "\" viewBox=\"0 0 "
      << cols << " " << rows << "\">\n";
  out << "<rect width=\"" << cols << "\" height=\"" << rows << "\" fill=\"white\"/>\n";

  // Lines, clipped to the window in floating point (drawing only).
  std::ostringstream lines;
  for (const auto& l : arr.lines()) {
    const double a = detail::to_double(l[0]), b = detail::to_double(l[1]), c = detail::to_double(l[2]);
    if (l[0].is_zero() && l[1].is_zero()) {
      ++sum.omitted_lines;
      continue;
    }
    std::vector<std::pair<double, double>> hits;
    auto keep = [&](double x, double y) {
      const double ex = 1e-9 * (wx1 - wx0), ey = 1e-9 * (wy1 - wy0);
      if (x >= wx0 - ex && x <= wx1 + ex && y >= wy0 - ey && y <= wy1 + ey) hits.emplace_back(x, y);
    };
    if (b != 0) {
      keep(wx0, -(a * wx0 + c) / b);
      keep(wx1, -(a * wx1 + c) / b);
    }
    if (a != 0) {
      keep(-(b * wy0 + c) / a, wy0);
      keep(-(b * wy1 + c) / a, wy1);
    }
    std::sort(hits.begin(), hits.end());
    ++sum.strokes;
    if (hits.size() < 2) continue;  // misses the window
    lines << "<line x1=\"" << detail::fmt(px(hits.front().first)) << "\" y1=\"" << detail::fmt(py(hits.front().second))
          << "\" x2=\"" << detail::fmt(px(hits.back().first)) << "\" y2=\"" << detail::fmt(py(hits.back().second))
          << "\"/>\n";
  }
  out << "<g id=\"lines\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"6 4\" fill=\"none\">\n"
      << lines.str() << "</g>\n";

  // Contour: exact signs of f(x, y, 1) at cell centres.
  if (curve != nullptr) {
    auto cell = [&](const Rational& lo, const Rational& hi, unsigned k, unsigned n) {
      return lo + (hi - lo) * Rational(mpz_class(2 * k + 1), mpz_class(2 * n));
    };
    std::vector<Element> xs, ys;
    for (unsigned i = 0; i < cols; ++i) xs.push_back(field.from_rational(cell(w.x0, w.x1, i, cols)));
    for (unsigned j = 0; j < rows; ++j) ys.push_back(field.from_rational(cell(w.y1, w.y0, j, rows)));
    // Univariate coefficients in x after substituting y and z = 1.
    const int deg = curve->degree();
    auto restrict_row = [&](const Element& y) {
      std::vector<Element> coef(static_cast<std::size_t>(deg) + 1, field.zero());
      for (const auto& t : curve->terms()) {
        Element c = t.coeff;
        for (unsigned k = 0; k < t.mono[1]; ++k) c = c * y;
        coef[t.mono[0]] = coef[t.mono[0]] + c;
      }
      return coef;
    };
    auto horner = [&](const std::vector<Element>& coef, const Element& x) {
      Element acc = field.zero();
      for (std::size_t k = coef.size(); k-- > 0;) acc = acc * x + coef[k];
      return detail::exact_sign(acc);
    };
    std::vector<signed char> sign(static_cast<std::size_t>(rows) * cols);
    const auto nrows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t js = 0; js < nrows; ++js) {
      auto j = static_cast<std::size_t>(js);
      auto coef = restrict_row(ys[j]);
      for (std::size_t i = 0; i < cols; ++i) sign[j * cols + i] = static_cast<signed char>(horner(coef, xs[i]));
    }
    std::vector<bool> mark(sign.size(), false);
    for (std::size_t j = 0; j < rows; ++j) {
      for (std::size_t i = 0; i < cols; ++i) {
        const auto s = sign[j * cols + i];
        if (s == 0) mark[j * cols + i] = true;
        if (i + 1 < cols && s * sign[j * cols + i + 1] < 0) mark[j * cols + i] = true;
        if (j + 1 < rows && s * sign[(j + 1) * cols + i] < 0) mark[j * cols + i] = true;
      }
    }
    out << "<path id=\"curve\" fill=\"#c00\" d=\"";
    for (std::size_t j = 0; j < rows; ++j) {
      // Runs of marked cells in a row become one rectangle.
      for (std::size_t i = 0; i < cols;) {
        if (!mark[j * cols + i]) {
          ++i;
          continue;
        }
        std::size_t run = i;
        while (run < cols && mark[j * cols + run]) ++run;
        sum.contour_cells += run - i;
        out << "M" << i << " " << j << "h" << (run - i) << "v1h-" << (run - i) << "z";
        i = run;
      }
    }
    out << "\"/>\n";
  }

  // Vertices.
  out << "<g id=\"points\" fill=\"#000\">\n";
  for (const auto& e : points.entries()) {
    if (e.point[2].is_zero()) {
      ++sum.vertices_at_infinity;
      continue;
    }
    const double x = detail::to_double(e.point[0] / e.point[2]);
    const double y = detail::to_double(e.point[1] / e.point[2]);
    ++sum.vertices;
    if (x < wx0 || x > wx1 || y < wy0 || y > wy1) continue;
    out << "<circle cx=\"" << detail::fmt(px(x)) << "\" cy=\"" << detail::fmt(py(y)) << "\" r=\""
        << detail::fmt(0.75 + 0.75 * e.multiplicity) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<metadata>{\"arrangement\":\"" << arr.name() << "\",\"field\":\"" << field.tag()
      << "\",\"chart\":\"z=1\",\"window\":[\"" << w.x0.to_string() << "\",\"" << w.x1.to_string() << "\",\""
      << w.y0.to_string() << "\",\"" << w.y1.to_string() << "\"],\"strokes\":" << sum.strokes
      << ",\"omitted_lines\":" << sum.omitted_lines << ",\"vertices\":" << sum.vertices
      << ",\"vertices_at_infinity\":" << sum.vertices_at_infinity << ",\"curve_degree\":"
      << (curve ? curve->degree() : -1) << ",\"contour_cells\":" << sum.contour_cells << "}</metadata>\n";
  if (sum.omitted_lines > 0) out << "<desc>The line z=0 is not shown.</desc>\n";
  out << "</svg>\n";
  if (summary) *summary = sum;
  return out.str();
}

}  // namespace idealis
