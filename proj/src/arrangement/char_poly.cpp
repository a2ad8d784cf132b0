#include <cmath>

#include "idealis/arrangement/arrangement.hpp"

namespace idealis {

namespace {

// Appends c*t^k in descending-polynomial style.
void append_term(std::string& out, long c, int k) {
  if (c == 0) return;
  if (c < 0)
    out += '-';
  else if (!out.empty())
    out += '+';
  long a = c < 0 ? -c : c;
  if (a != 1 || k == 0) out += std::to_string(a);
  if (k >= 1) out += 't';
  if (k >= 2) out += '^' + std::to_string(k);
}

bool is_square(long n) {
  if (n < 0) return false;
  auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long s = std::max(0L, r - 2); s <= r + 2; ++s) {
    if (s * s == n) return true;
  }
  return false;
}

}  // namespace

CharPoly char_poly_from_counts(long lines, const std::vector<unsigned>& multiplicities) {
  CharPoly c;
  c.lines = lines;
  for (unsigned m : multiplicities) c.linear += static_cast<long>(m) - 1;
  c.constant = c.linear + 1 - lines;
  c.q1 = 1 - lines;
  c.q0 = c.constant;
  c.discriminant = c.q1 * c.q1 - 4 * c.q0;
  c.splits = is_square(c.discriminant);
  return c;
}

std::string CharPoly::cubic_text() const {
  std::string s;
  append_term(s, 1, 3);
  append_term(s, -lines, 2);
  append_term(s, linear, 1);
  append_term(s, -constant, 0);
  return s;
}

std::string CharPoly::quotient_text() const {
  std::string s;
  append_term(s, 1, 2);
  append_term(s, q1, 1);
  append_term(s, q0, 0);
  return s;
}

std::string CharPoly::ascending_text() const {
  std::string s = "1";
  if (q1 != 0) s += (q1 < 0 ? "-" : "+") + std::to_string(q1 < 0 ? -q1 : q1) + "t";
  if (q0 != 0) s += (q0 < 0 ? "-" : "+") + std::to_string(q0 < 0 ? -q0 : q0) + "t^2";
  return s;
}

}  // namespace idealis
