#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>

#include "idealis/algebra/polynomial.hpp"

namespace idealis {

// Polynomial text format: a sum of terms `c*x^a*y^b*z^c`. Coefficients are
// written `p/q`, `(p/q+r/s*sqrt(d))` or, over F_p, as the residue in [0, p);
// the parser additionally accepts `n mod p`, arbitrary parentheses, products
// and integer powers. Whitespace is ignored.

namespace detail {

struct CoefficientText {
  bool negative = false;
  std::string magnitude;
  bool unit = false;
};

inline CoefficientText coefficient_text(const Rational& c) {
  Rational a = c.sign() < 0 ? -c : c;
  return {c.sign() < 0, a.to_string(), a.is_one()};
}

inline CoefficientText coefficient_text(const Quadratic& c) {
  if (c.is_rational()) return coefficient_text(c.rational_part());
  return {false, "(" + c.to_string() + ")", false};
}

inline CoefficientText coefficient_text(const Residue& c) {
  return {false, std::to_string(c.value()), c.is_one()};
}

}  // namespace detail

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

template <CoefficientField F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const auto& vars = f.ring()->variables();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = detail::coefficient_text(t.coeff);
    if (c.negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (t.mono.is_one()) {
      out += c.magnitude;
    } else {
      if (!c.unit) out += c.magnitude + '*';
      out += monomial_to_string(t.mono, vars);
    }
  }
  return out;
}

namespace detail {

template <CoefficientField F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr<F> ring) : ring_(std::move(ring)) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
    }
  }

  Polynomial<F> parse() {
    if (src_.empty()) fail("empty polynomial");
    Polynomial<F> p = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial text at offset " + std::to_string(pos_) + ": " + msg);
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() const { return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])); }
  bool peek_alpha() const { return pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])); }

  std::string number() {
    std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected a number");
    return src_.substr(start, pos_ - start);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  Polynomial<F> expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    while (pos_ < src_.size()) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = power();
    while (pos_ < src_.size()) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        Polynomial<F> d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(d.leading_coefficient().inverse());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<F> power() {
    Polynomial<F> base = atom();
    if (accept('^')) {
      std::string e = number();
      if (e.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial<F> atom() {
    if (accept('(')) {
      Polynomial<F> inner = expr();
      expect(')');
      return inner;
    }
    if (peek_digit()) {
      std::string n = number();
      typename F::Element value = ring_->field().from_integer(mpz_class(n, 10));
      if (src_.compare(pos_, 3, "mod") == 0) {
        pos_ += 3;
        std::string p = number();
        if constexpr (std::is_same_v<F, PrimeField>) {
          if (std::to_string(ring_->field().p) != p) fail("modulus " + p + " does not match the ring");
        } else {
          fail("'mod' coefficients need a prime field");
        }
      }
      return Polynomial<F>::constant(ring_, std::move(value));
    }
    if (peek_alpha()) {
      std::string id = identifier();
      if (id == "sqrt") {
        expect('(');
        std::string d = number();
        expect(')');
        auto r = ring_->field().sqrt_of(std::stoll(d));
        if (!r) fail("sqrt(" + d + ") is not in field " + ring_->field().tag());
        return Polynomial<F>::constant(ring_, *r);
      }
      auto idx = ring_->index_of(id);
      if (!idx) fail("unknown variable '" + id + "'");
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail("unexpected end of input");
  }

  std::string src_;
  std::size_t pos_ = 0;
  RingPtr<F> ring_;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolynomialParser<F>(text, ring).parse();
}

/// Parses a scalar of the given field in polynomial coefficient syntax.
template <CoefficientField F>
typename F::Element parse_element(std::string_view text, const F& field) {
  auto ring = make_ring(field, {"_"});
  Polynomial<F> p = parse_polynomial(text, ring);
  if (!p.is_constant()) throw ParseError("expected a constant, got '" + std::string(text) + "'");
  return p.is_zero() ? field.zero() : p.leading_coefficient();
}

template <CoefficientField F>
std::string element_to_text(const typename F::Element& e) {
  auto c = detail::coefficient_text(e);
  return (c.negative ? "-" : "") + c.magnitude;
}

}  // namespace idealis
