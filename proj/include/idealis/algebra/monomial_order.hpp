#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "idealis/algebra/monomial.hpp"

namespace idealis {

/// Global monomial order. `Block` compares the first `block_size` variables
/// by degrevlex and breaks ties by degrevlex on the remaining variables, so
/// it eliminates the front block.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Block };

  Kind kind = Kind::DegRevLex;
  std::size_t block_size = 0;

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(std::size_t front) { return {Kind::Block, front}; }

  /// Negative, zero or positive as a <, =, > b over the first `nvars`
  /// variables.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    switch (kind) {
      case Kind::DegRevLex:
        return degrevlex_range(a, b, 0, nvars);
      case Kind::Lex:
        for (std::size_t i = 0; i < nvars; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::Block: {
        int c = degrevlex_range(a, b, 0, block_size);
        return c != 0 ? c : degrevlex_range(a, b, block_size, nvars - block_size);
      }
    }
    return 0;
  }

  std::string name() const;
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t count) {
    unsigned da = a.partial_degree(first, count);
    unsigned db = b.partial_degree(first, count);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = first + count; i-- > first;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace idealis
