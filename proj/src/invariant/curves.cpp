#include "idealis/invariant/curves.hpp"

namespace idealis {

namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

}  // namespace

CurveName parse_curve_name(std::string_view text) {
  if (text == "gamma") return CurveName::Gamma;
  if (text == "delta") return CurveName::Delta;
  throw ParseError("unknown curve '" + std::string(text) + "' (expected gamma or delta)");
}

std::string curve_name(CurveName c) { return c == CurveName::Gamma ? "gamma" : "delta"; }

unsigned curve_degree(CurveName c) { return c == CurveName::Gamma ? 12 : 10; }

const ReferenceCoefficients& reference_coefficients(CurveName c) {
  static const ReferenceCoefficients gamma{
      {{12, 0, 0}, q(2093688, 17)},     {{10, 1, 0}, q(-9398511, 34)},    {{8, 2, 0}, q(2995218, 17)},
      {{6, 3, 0}, q(-64485153, 1088)},  {{4, 4, 0}, q(18708003, 4352)},   {{2, 5, 0}, q(1258659, 4352)},
      {{0, 6, 0}, q(-493695, 4352)},    {{6, 0, 1}, q(2121309, 1088)},    {{4, 1, 1}, q(-402561, 4352)},
      {{2, 2, 1}, q(-158697, 4352)},    {{0, 3, 1}, q(2619, 128)},        {{0, 0, 2}, q(-3979, 4352)},
  };
  // The f1^6 f2^2 entry is printed with denominator 4107; kept verbatim.
  static const ReferenceCoefficients delta{
      {{10, 0, 0}, q(-38320128, 107)},  {{8, 1, 0}, q(80453952, 107)},    {{6, 2, 0}, q(-42393996, 4107)},
      {{4, 3, 0}, q(50759217, 214)},    {{2, 4, 0}, q(-20519091, 856)},   {{0, 5, 0}, q(67086, 107)},
      {{4, 0, 1}, q(-3811059, 214)},    {{2, 1, 1}, q(1778227, 856)},     {{0, 2, 1}, q(-6089, 107)},
  };
  return c == CurveName::Gamma ? gamma : delta;
}

std::array<unsigned, 3> reference_anchor(CurveName c) {
  return c == CurveName::Gamma ? std::array<unsigned, 3>{12, 0, 0} : std::array<unsigned, 3>{10, 0, 0};
}

}  // namespace idealis
