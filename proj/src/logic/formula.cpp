#include "lpforge/logic/formula.hpp"

#include <cctype>

namespace lpforge::logic {

TermPtr var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::variable;
  t->name = std::move(name);
  return t;
}

TermPtr constant(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::constant;
  t->name = std::move(name);
  return t;
}

TermPtr numeral(unsigned long long v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::numeral;
  t->value = v;
  return t;
}

TermPtr apply(TermPtr fn, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::apply;
  t->child1 = std::move(fn);
  t->child2 = std::move(arg);
  return t;
}

TermPtr lambda(std::string binder, FiniteType type, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::lambda;
  t->binder = std::move(binder);
  t->binder_type = type;
  t->child1 = std::move(body);
  return t;
}

TermPtr norm_of(TermPtr inner) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::norm;
  t->child1 = std::move(inner);
  return t;
}

TermPtr add_term(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::add;
  t->child1 = std::move(a);
  t->child2 = std::move(b);
  return t;
}

TermPtr neg_term(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::neg;
  t->child1 = std::move(a);
  return t;
}

TermPtr smul_term(TermPtr scalar, TermPtr vec) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::smul;
  t->child1 = std::move(scalar);
  t->child2 = std::move(vec);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::variable:
    case Term::Kind::constant:
      return a->name == b->name;
    case Term::Kind::numeral:
      return a->value == b->value;
    case Term::Kind::apply:
    case Term::Kind::add:
    case Term::Kind::smul:
      return term_equal(a->child1, b->child1) &&
             term_equal(a->child2, b->child2);
    case Term::Kind::norm:
    case Term::Kind::neg:
      return term_equal(a->child1, b->child1);
    case Term::Kind::lambda:
      return a->binder == b->binder && a->binder_type == b->binder_type &&
             term_equal(a->child1, b->child1);
  }
  return false;
}

FormulaPtr atom(Rel rel, TermPtr lhs, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::atom;
  f->rel = rel;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr negation(FormulaPtr inner) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::negation;
  f->left = std::move(inner);
  return f;
}

namespace {

FormulaPtr binary(Formula::Kind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

}  // namespace

FormulaPtr conjunction(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::conjunction, std::move(a), std::move(b));
}

FormulaPtr disjunction(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::disjunction, std::move(a), std::move(b));
}

FormulaPtr implication(FormulaPtr a, FormulaPtr b) {
  return binary(Formula::Kind::implication, std::move(a), std::move(b));
}

FormulaPtr quantified(Quant q, std::string v, FiniteType type, TermPtr bound,
                      FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::quantified;
  f->quant = q;
  f->var = std::move(v);
  f->var_type = type;
  f->bound = std::move(bound);
  f->left = std::move(body);
  return f;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::atom:
      return a->rel == b->rel && term_equal(a->lhs, b->lhs) &&
             term_equal(a->rhs, b->rhs);
    case Formula::Kind::negation:
      return formula_equal(a->left, b->left);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
      return formula_equal(a->left, b->left) &&
             formula_equal(a->right, b->right);
    case Formula::Kind::quantified:
      return a->quant == b->quant && a->var == b->var &&
             a->var_type == b->var_type &&
             ((a->bound == nullptr) == (b->bound == nullptr)) &&
             (a->bound == nullptr || term_equal(a->bound, b->bound)) &&
             formula_equal(a->left, b->left);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  end, ident, number, keyword_forall, keyword_exists, keyword_prec,
  const_zero_x, const_one_x, const_cp, const_big_c,
  lparen, rparen, dot, colon, comma,
  plus, minus, star, backslash, norm_bars,
  tilde, amp, pipe, arrow,
  rel_eq_real, rel_le_real, rel_le_nat, prefix_le,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  unsigned long long number = 0;
  std::size_t pos = 0;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
    Token t;
    t.pos = pos;
    if (pos >= src.size()) return t;
    const char c = src[pos];

    auto two = [&](char a, char b) {
      return c == a && pos + 1 < src.size() && src[pos + 1] == b;
    };

    if (two('|', '|')) { pos += 2; t.kind = Tok::norm_bars; return t; }
    if (two('-', '>')) { pos += 2; t.kind = Tok::arrow; return t; }
    if (c == '<' && pos + 1 < src.size() && src[pos + 1] == '=') {
      // "<=R" and "<=0" are single relation tokens; a bare "<=" is the
      // quantifier-prefix bound marker
      if (pos + 2 < src.size() && src[pos + 2] == 'R') {
        pos += 3;
        t.kind = Tok::rel_le_real;
        return t;
      }
      if (pos + 2 < src.size() && src[pos + 2] == '0') {
        pos += 3;
        t.kind = Tok::rel_le_nat;
        return t;
      }
      pos += 2;
      t.kind = Tok::prefix_le;
      return t;
    }
    if (c == '=' && pos + 1 < src.size() && src[pos + 1] == 'R') {
      pos += 2;
      t.kind = Tok::rel_eq_real;
      return t;
    }

    switch (c) {
      case '(': ++pos; t.kind = Tok::lparen; return t;
      case ')': ++pos; t.kind = Tok::rparen; return t;
      case '.': ++pos; t.kind = Tok::dot; return t;
      case ':': ++pos; t.kind = Tok::colon; return t;
      case ',': ++pos; t.kind = Tok::comma; return t;
      case '+': ++pos; t.kind = Tok::plus; return t;
      case '-': ++pos; t.kind = Tok::minus; return t;
      case '*': ++pos; t.kind = Tok::star; return t;
      case '\\': ++pos; t.kind = Tok::backslash; return t;
      case '~': ++pos; t.kind = Tok::tilde; return t;
      case '&': ++pos; t.kind = Tok::amp; return t;
      case '|': ++pos; t.kind = Tok::pipe; return t;
      default: break;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      // 0_X and 1_X are element constants, not numerals
      if (pos + 1 < src.size() && src[pos] == '_' && src[pos + 1] == 'X') {
        const std::string digits = src.substr(start, pos - start);
        pos += 2;
        if (digits == "0") { t.kind = Tok::const_zero_x; return t; }
        if (digits == "1") { t.kind = Tok::const_one_x; return t; }
        throw SyntaxError("unknown constant " + digits + "_X", start);
      }
      t.kind = Tok::number;
      t.number = std::stoull(src.substr(start, pos - start));
      return t;
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) ||
              src[pos] == '_' || src[pos] == '\''))
        ++pos;
      t.text = src.substr(start, pos - start);
      if (t.text == "forall") t.kind = Tok::keyword_forall;
      else if (t.text == "exists") t.kind = Tok::keyword_exists;
      else if (t.text == "prec") t.kind = Tok::keyword_prec;
      else if (t.text == "c_p") t.kind = Tok::const_cp;
      else if (t.text == "C") t.kind = Tok::const_big_c;
      else t.kind = Tok::ident;
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  const std::string& src;
  Lexer lexer;
  Token tok;

  explicit Parser(const std::string& s) : src(s), lexer{s} { advance(); }

  void advance() { tok = lexer.next(); }

  std::size_t save() const { return tok.pos; }
  void restore(std::size_t p) {
    lexer.pos = p;
    advance();
  }

  bool accept(Tok k) {
    if (tok.kind == k) {
      advance();
      return true;
    }
    return false;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(std::string("expected ") + what, tok.pos);
  }

  // --- type syntax is delegated to the type parser on a balanced slice ---
  FiniteType parse_type_at() {
    // scan a maximal run of type tokens: '0' 'X' '1' '(' ')' '->' spaces
    std::size_t start = tok.pos;
    std::size_t i = start;
    int depth = 0;
    std::size_t end = start;
    while (i < src.size()) {
      const char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      if (c == '0' || c == 'X' || c == '1') { ++i; end = i; continue; }
      if (c == '(') { ++depth; ++i; end = i; continue; }
      if (c == ')') {
        if (depth == 0) break;
        --depth; ++i; end = i; continue;
      }
      if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
        i += 2; end = i; continue;
      }
      break;
    }
    if (end == start) throw SyntaxError("expected a type", start);
    FiniteType t = parse_type(src.substr(start, end - start));
    restore(end);
    return t;
  }

  // --- terms ---

  TermPtr parse_term_top() { return parse_add(); }

  TermPtr parse_add() {
    TermPtr left = parse_mul();
    for (;;) {
      if (accept(Tok::plus)) {
        left = add_term(std::move(left), parse_mul());
      } else if (tok.kind == Tok::minus) {
        advance();
        left = add_term(std::move(left), neg_term(parse_mul()));
      } else {
        return left;
      }
    }
  }

  TermPtr parse_mul() {
    TermPtr left = parse_unary();
    while (accept(Tok::star)) left = smul_term(std::move(left), parse_unary());
    return left;
  }

  TermPtr parse_unary() {
    if (accept(Tok::minus)) return neg_term(parse_unary());
    return parse_app();
  }

  TermPtr parse_app() {
    TermPtr head = parse_atom_term();
    while (tok.kind == Tok::lparen) {
      advance();
      TermPtr arg = parse_term_top();
      expect(Tok::rparen, "')'");
      head = apply(std::move(head), std::move(arg));
    }
    return head;
  }

  TermPtr parse_atom_term() {
    switch (tok.kind) {
      case Tok::norm_bars: {
        advance();
        TermPtr inner = parse_term_top();
        expect(Tok::norm_bars, "'||'");
        return norm_of(std::move(inner));
      }
      case Tok::number: {
        const unsigned long long v = tok.number;
        advance();
        return numeral(v);
      }
      case Tok::const_zero_x: advance(); return constant("0_X");
      case Tok::const_one_x: advance(); return constant("1_X");
      case Tok::const_cp: advance(); return constant("c_p");
      case Tok::const_big_c: advance(); return constant("C");
      case Tok::ident: {
        std::string name = tok.text;
        advance();
        return var(std::move(name));
      }
      case Tok::backslash: {
        advance();
        if (tok.kind != Tok::ident)
          throw SyntaxError("expected a lambda binder", tok.pos);
        std::string binder = tok.text;
        advance();
        expect(Tok::colon, "':'");
        FiniteType ty = parse_type_at();
        expect(Tok::dot, "'.'");
        return lambda(std::move(binder), ty, parse_term_top());
      }
      case Tok::lparen: {
        advance();
        TermPtr inner = parse_term_top();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        throw SyntaxError("expected a term", tok.pos);
    }
  }

  // --- formulas ---

  FormulaPtr parse_formula_top() {
    if (tok.kind == Tok::keyword_forall || tok.kind == Tok::keyword_exists) {
      const Quant q =
          tok.kind == Tok::keyword_forall ? Quant::forall : Quant::exists;
      advance();
      if (tok.kind != Tok::ident)
        throw SyntaxError("expected a quantified variable", tok.pos);
      std::string name = tok.text;
      advance();
      expect(Tok::colon, "':'");
      FiniteType ty = parse_type_at();
      TermPtr bound;
      if (accept(Tok::prefix_le)) bound = parse_term_top();
      expect(Tok::dot, "'.'");
      return quantified(q, std::move(name), ty, std::move(bound),
                        parse_formula_top());
    }
    return parse_implication();
  }

  FormulaPtr parse_implication() {
    FormulaPtr left = parse_disjunction();
    if (accept(Tok::arrow))
      return implication(std::move(left), parse_implication());
    return left;
  }

  FormulaPtr parse_disjunction() {
    FormulaPtr left = parse_conjunction();
    while (accept(Tok::pipe))
      left = disjunction(std::move(left), parse_conjunction());
    return left;
  }

  FormulaPtr parse_conjunction() {
    FormulaPtr left = parse_negation();
    while (accept(Tok::amp))
      left = conjunction(std::move(left), parse_negation());
    return left;
  }

  FormulaPtr parse_negation() {
    if (accept(Tok::tilde)) return negation(parse_negation());
    return parse_atom_formula();
  }

  // A '(' may open either a parenthesized formula or a parenthesized term
  // on the left of a relation; try the term reading first and fall back.
  FormulaPtr parse_atom_formula() {
    if (tok.kind == Tok::lparen) {
      const std::size_t mark = save();
      bool term_ok = true;
      TermPtr lhs;
      try {
        lhs = parse_term_top();
      } catch (const SyntaxError&) {
        term_ok = false;
      }
      if (term_ok && is_relation(tok.kind))
        return finish_atom(std::move(lhs));
      restore(mark);
      expect(Tok::lparen, "'('");
      FormulaPtr inner = parse_formula_top();
      expect(Tok::rparen, "')'");
      return inner;
    }
    return finish_atom(parse_term_top());
  }

  static bool is_relation(Tok k) {
    return k == Tok::rel_eq_real || k == Tok::rel_le_real ||
           k == Tok::rel_le_nat || k == Tok::keyword_prec;
  }

  FormulaPtr finish_atom(TermPtr lhs) {
    Rel rel;
    switch (tok.kind) {
      case Tok::rel_eq_real: rel = Rel::eq_real; break;
      case Tok::rel_le_real: rel = Rel::le_real; break;
      case Tok::rel_le_nat: rel = Rel::le_nat; break;
      case Tok::keyword_prec: rel = Rel::preceq; break;
      default:
        throw SyntaxError("expected a relation (=R, <=R, <=0, prec)", tok.pos);
    }
    advance();
    return atom(rel, std::move(lhs), parse_term_top());
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.parse_formula_top();
  if (p.tok.kind != Tok::end)
    throw SyntaxError("trailing input after formula", p.tok.pos);
  return f;
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.parse_term_top();
  if (p.tok.kind != Tok::end)
    throw SyntaxError("trailing input after term", p.tok.pos);
  return t;
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// precedence: lambda 0 < add 1 < smul 2 < neg 3 < apply/atoms 4
int term_prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::lambda: return 0;
    case Term::Kind::add: return 1;
    case Term::Kind::smul: return 2;
    case Term::Kind::neg: return 3;
    default: return 4;
  }
}

std::string print_term_prec(const TermPtr& t, int min_prec) {
  const int prec = term_prec(*t);
  std::string out;
  switch (t->kind) {
    case Term::Kind::variable: out = t->name; break;
    case Term::Kind::constant: out = t->name; break;
    case Term::Kind::numeral: out = std::to_string(t->value); break;
    case Term::Kind::norm:
      out = "||" + print_term_prec(t->child1, 0) + "||";
      break;
    case Term::Kind::apply:
      out = print_term_prec(t->child1, 4) + "(" +
            print_term_prec(t->child2, 0) + ")";
      break;
    case Term::Kind::lambda:
      out = "\\" + t->binder + ":" + print_type(t->binder_type) + ". " +
            print_term_prec(t->child1, 0);
      break;
    case Term::Kind::add:
      if (t->child2->kind == Term::Kind::neg)
        out = print_term_prec(t->child1, 1) + " - " +
              print_term_prec(t->child2->child1, 2);
      else
        out = print_term_prec(t->child1, 1) + " + " +
              print_term_prec(t->child2, 2);
      break;
    case Term::Kind::neg:
      out = "-" + print_term_prec(t->child1, 3);
      break;
    case Term::Kind::smul:
      out = print_term_prec(t->child1, 3) + " * " +
            print_term_prec(t->child2, 3);
      break;
  }
  if (prec < min_prec) return "(" + out + ")";
  return out;
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::eq_real: return "=R";
    case Rel::le_real: return "<=R";
    case Rel::le_nat: return "<=0";
    case Rel::preceq: return "prec";
  }
  return "=R";
}

// precedence: quantifier 0 < implication 1 < disjunction 2 < conjunction 3
// < negation 4 < atom 5
int formula_prec(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::quantified: return 0;
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::negation: return 4;
    case Formula::Kind::atom: return 5;
  }
  return 5;
}

std::string print_formula_prec(const FormulaPtr& f, int min_prec) {
  const int prec = formula_prec(*f);
  std::string out;
  switch (f->kind) {
    case Formula::Kind::atom:
      out = print_term_prec(f->lhs, 1) + " " + rel_text(f->rel) + " " +
            print_term_prec(f->rhs, 1);
      break;
    case Formula::Kind::negation:
      out = "~" + print_formula_prec(f->left, 4);
      break;
    case Formula::Kind::conjunction:
      out = print_formula_prec(f->left, 3) + " & " +
            print_formula_prec(f->right, 4);
      break;
    case Formula::Kind::disjunction:
      out = print_formula_prec(f->left, 2) + " | " +
            print_formula_prec(f->right, 3);
      break;
    case Formula::Kind::implication:
      out = print_formula_prec(f->left, 2) + " -> " +
            print_formula_prec(f->right, 1);
      break;
    case Formula::Kind::quantified:
      out = std::string(f->quant == Quant::forall ? "forall " : "exists ") +
            f->var + ":" + print_type(f->var_type);
      if (f->bound) out += " <= " + print_term_prec(f->bound, 1);
      out += ". " + print_formula_prec(f->left, 0);
      break;
  }
  if (prec < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

std::string print_term(const TermPtr& t) { return print_term_prec(t, 0); }

std::string print_formula(const FormulaPtr& f) {
  return print_formula_prec(f, 0);
}

// ---------------------------------------------------------------------------
// Typechecking
// ---------------------------------------------------------------------------

namespace {

const FiniteType kNat = FiniteType::nat();
const FiniteType kSpace = FiniteType::space();
const FiniteType kReal = FiniteType::arrow(kNat, kNat);  // 1 = 0(0)

FiniteType constant_type(const std::string& name, const TermPtr& t) {
  if (name == "0_X" || name == "1_X") return kSpace;
  if (name == "c_p") return kReal;
  // C : X(X(0)), the limit operator on sequences
  if (name == "C")
    return FiniteType::arrow(FiniteType::arrow(kNat, kSpace), kSpace);
  throw TypeError("unknown constant", print_term(t));
}

void push_var(TypeEnv& env, const std::string& name, const FiniteType& ty) {
  env[name].push_back(ty);
}

void pop_var(TypeEnv& env, const std::string& name) {
  auto it = env.find(name);
  it->second.pop_back();
  if (it->second.empty()) env.erase(it);
}

}  // namespace

FiniteType infer_type(const TermPtr& t, TypeEnv& env) {
  switch (t->kind) {
    case Term::Kind::variable: {
      auto it = env.find(t->name);
      if (it == env.end() || it->second.empty())
        throw TypeError("unbound variable " + t->name, print_term(t));
      return it->second.back();
    }
    case Term::Kind::constant:
      return constant_type(t->name, t);
    case Term::Kind::numeral:
      return kNat;
    case Term::Kind::norm: {
      if (infer_type(t->child1, env) != kSpace)
        throw TypeError("norm applies to terms of type X", print_term(t));
      return kReal;
    }
    case Term::Kind::add: {
      if (infer_type(t->child1, env) != kSpace ||
          infer_type(t->child2, env) != kSpace)
        throw TypeError("vector addition needs operands of type X",
                        print_term(t));
      return kSpace;
    }
    case Term::Kind::neg: {
      if (infer_type(t->child1, env) != kSpace)
        throw TypeError("vector negation needs an operand of type X",
                        print_term(t));
      return kSpace;
    }
    case Term::Kind::smul: {
      if (infer_type(t->child1, env) != kReal)
        throw TypeError("scalar of a multiplication must have type 1",
                        print_term(t));
      if (infer_type(t->child2, env) != kSpace)
        throw TypeError("vector of a multiplication must have type X",
                        print_term(t));
      return kSpace;
    }
    case Term::Kind::apply: {
      const FiniteType fn = infer_type(t->child1, env);
      if (fn.kind() != FiniteType::Kind::arrow)
        throw TypeError("application of a non-function", print_term(t));
      const FiniteType arg = infer_type(t->child2, env);
      if (arg != fn.domain())
        throw TypeError("argument type " + print_type(arg) +
                            " does not match domain " + print_type(fn.domain()),
                        print_term(t));
      return fn.codomain();
    }
    case Term::Kind::lambda: {
      push_var(env, t->binder, t->binder_type);
      const FiniteType body = infer_type(t->child1, env);
      pop_var(env, t->binder);
      return FiniteType::arrow(t->binder_type, body);
    }
  }
  throw TypeError("malformed term", print_term(t));
}

namespace {

void typecheck_rec(const FormulaPtr& f, TypeEnv& env) {
  switch (f->kind) {
    case Formula::Kind::atom: {
      const FiniteType l = infer_type(f->lhs, env);
      const FiniteType r = infer_type(f->rhs, env);
      switch (f->rel) {
        case Rel::eq_real:
        case Rel::le_real:
          if (l != kReal || r != kReal)
            throw TypeError("real relation needs operands of type 1",
                            print_term(f->lhs));
          break;
        case Rel::le_nat:
          if (l != kNat || r != kNat)
            throw TypeError("<=0 needs operands of type 0", print_term(f->lhs));
          break;
        case Rel::preceq:
          if (l != r)
            throw TypeError("prec needs operands of one type",
                            print_term(f->lhs));
          break;
      }
      return;
    }
    case Formula::Kind::negation:
      typecheck_rec(f->left, env);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
      typecheck_rec(f->left, env);
      typecheck_rec(f->right, env);
      return;
    case Formula::Kind::quantified: {
      if (f->bound) {
        // the bound is a term of the variable's type, scoped outside it
        const FiniteType bt = infer_type(f->bound, env);
        if (bt != f->var_type)
          throw TypeError("prefix bound of type " + print_type(bt) +
                              " for a variable of type " +
                              print_type(f->var_type),
                          print_term(f->bound));
      }
      push_var(env, f->var, f->var_type);
      typecheck_rec(f->left, env);
      pop_var(env, f->var);
      return;
    }
  }
}

}  // namespace

void typecheck_formula(const FormulaPtr& f) {
  TypeEnv env;
  typecheck_rec(f, env);
}

}  // namespace lpforge::logic
