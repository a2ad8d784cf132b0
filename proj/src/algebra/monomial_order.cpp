#include "idealis/algebra/monomial_order.hpp"

#include "idealis/algebra/errors.hpp"

namespace idealis {

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block:" + std::to_string(block_size);
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "degrevlex" || text == "dp") return degrevlex();
  if (text == "lex" || text == "lp") return lex();
  if (text.starts_with("block:")) {
    std::size_t n = 0;
    for (char c : text.substr(6)) {
      if (c < '0' || c > '9') throw ParseError("malformed block order '" + std::string(text) + "'");
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return block(n);
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "'");
}

}  // namespace idealis
