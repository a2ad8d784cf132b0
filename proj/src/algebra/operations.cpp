#include "idealis/algebra/operations.hpp"

namespace idealis {

Residue specialize_element(const Quadratic& c, const PrimeField& fp) {
  Residue a = fp.from_rational(c.rational_part());
  if (c.sqrt_part().is_zero()) return a;
  auto root = sqrt_in_prime_field(fp.p, c.radicand());
  if (!root) {
    throw BadPrime("sqrt(" + std::to_string(c.radicand()) + ") does not exist modulo " + std::to_string(fp.p));
  }
  return a + fp.from_rational(c.sqrt_part()) * Residue(*root, fp.p);
}

}  // namespace idealis
