#include "lpforge/logic/type.hpp"

#include <cctype>

namespace lpforge::logic {

bool is_small(const FiniteType& t) {
  FiniteType cur = t;
  while (cur.kind() == FiniteType::Kind::arrow) {
    if (cur.domain() != FiniteType::nat()) return false;
    cur = cur.codomain();
  }
  return true;
}

bool is_admissible(const FiniteType& t) {
  FiniteType cur = t;
  while (cur.kind() == FiniteType::Kind::arrow) {
    if (!is_small(cur.domain())) return false;
    cur = cur.codomain();
  }
  return true;
}

FiniteType hat_type(const FiniteType& t) {
  switch (t.kind()) {
    case FiniteType::Kind::nat: return FiniteType::nat();
    case FiniteType::Kind::space: return FiniteType::nat();
    case FiniteType::Kind::arrow:
      return FiniteType::arrow(hat_type(t.domain()), hat_type(t.codomain()));
  }
  return FiniteType::nat();
}

namespace {

struct TypeParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  // type := app ('->' type)?
  FiniteType parse() {
    FiniteType left = parse_app();
    if (eat_arrow()) return FiniteType::arrow(left, parse());
    return left;
  }

  // app := primary ('(' type ')')*   with T(R) meaning R -> T
  FiniteType parse_app() {
    FiniteType head = parse_primary();
    while (eat('(')) {
      FiniteType arg = parse();
      if (!eat(')')) throw SyntaxError("expected ')'", pos);
      head = FiniteType::arrow(arg, head);
    }
    return head;
  }

  FiniteType parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of type", pos);
    const char c = text[pos];
    if (c == '0') {
      ++pos;
      return FiniteType::nat();
    }
    if (c == 'X') {
      ++pos;
      return FiniteType::space();
    }
    if (c == '1') {  // shorthand for the type of reals, 0(0)
      ++pos;
      return FiniteType::arrow(FiniteType::nat(), FiniteType::nat());
    }
    if (c == '(') {
      ++pos;
      FiniteType inner = parse();
      if (!eat(')')) throw SyntaxError("expected ')'", pos);
      return inner;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "' in type",
                      pos);
  }
};

}  // namespace

FiniteType parse_type(const std::string& text) {
  TypeParser p{text};
  FiniteType t = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw SyntaxError("trailing input after type", p.pos);
  return t;
}

std::string print_type(const FiniteType& t) {
  switch (t.kind()) {
    case FiniteType::Kind::nat: return "0";
    case FiniteType::Kind::space: return "X";
    case FiniteType::Kind::arrow:
      return print_type(t.codomain()) + "(" + print_type(t.domain()) + ")";
  }
  return "0";
}

}  // namespace lpforge::logic
