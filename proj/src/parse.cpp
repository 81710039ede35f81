#include "mil/parse.hpp"

#include <cctype>

namespace mil {
namespace {

struct Parser {
  const RingPtr& ring;
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(Errc::parse_error, msg + " at position " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\"");
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_unary();
    while (peek() == '*') {
      ++pos;
      acc = acc * parse_unary();
    }
    return acc;
  }

  Poly parse_unary() {
    if (peek() == '-') {
      ++pos;
      return -parse_unary();
    }
    return parse_power();
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (peek() == '^') {
      ++pos;
      long e = parse_int();
      if (e < 0) error("negative exponent");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      error("expected integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }

  Poly parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      if (peek() != ')') error("expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = parse_int();
      return Poly::constant(ring, ring->field().from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      const auto& vars = ring->variables();
      for (int i = 0; i < ring->n(); ++i)
        if (vars[i] == name) return Poly::variable(ring, i);
      if (name == "a" && ring->field().extension_degree() > 1)
        return Poly::constant(ring, ring->field().generator());
      error("unknown symbol '" + name + "'");
    }
    error("unexpected character");
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  Parser p{ring, text};
  Poly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return out;
}

Scalar parse_scalar(const FieldPtr& field, std::string_view text) {
  RingPtr scalars = make_ring(field, {});
  Poly p = parse_poly(scalars, text);
  if (p.is_zero()) return field->zero();
  return p.leading_coeff();
}

}  // namespace mil
