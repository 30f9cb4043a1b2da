#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lpforge/logic/type.hpp"

namespace lpforge::logic {

// Terms over typed variables and the normed-space signature. The vector
// operations appear as operator sugar: x + y and x - y for +_X (the latter
// through -_X), a * x for scalar multiplication, -x for -_X, ||x|| for the
// norm. Named constants are 0_X, 1_X (elements), c_p (a real) and C (the
// completion operator, type X(X(0))). Numerals have type 0.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind {
    variable,
    constant,
    numeral,
    apply,    // child1(child2)
    lambda,   // \binder:binder_type. child1
    norm,     // ||child1||
    add,      // child1 + child2
    neg,      // -child1
    smul,     // child1 * child2, child1 of type 1
  };

  Kind kind;
  std::string name;                // variable or constant
  unsigned long long value = 0;    // numeral
  TermPtr child1, child2;
  std::string binder;
  FiniteType binder_type;
};

TermPtr var(std::string name);
TermPtr constant(std::string name);
TermPtr numeral(unsigned long long v);
TermPtr apply(TermPtr fn, TermPtr arg);
TermPtr lambda(std::string binder, FiniteType type, TermPtr body);
TermPtr norm_of(TermPtr t);
TermPtr add_term(TermPtr a, TermPtr b);
TermPtr neg_term(TermPtr a);
TermPtr smul_term(TermPtr scalar, TermPtr vec);

bool term_equal(const TermPtr& a, const TermPtr& b);

// Atomic relations of the fragment.
enum class Rel { eq_real, le_real, le_nat, preceq };

enum class Quant { forall, exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    atom,
    negation,      // ~left
    conjunction,   // left & right
    disjunction,   // left | right
    implication,   // left -> right
    quantified,    // forall/exists var:type [<= bound]. left
  };

  Kind kind;
  Rel rel = Rel::eq_real;
  TermPtr lhs, rhs;
  FormulaPtr left, right;
  Quant quant = Quant::forall;
  std::string var;
  FiniteType var_type;
  TermPtr bound;  // null when the quantifier is unbounded
};

FormulaPtr atom(Rel rel, TermPtr lhs, TermPtr rhs);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
FormulaPtr implication(FormulaPtr a, FormulaPtr b);
FormulaPtr quantified(Quant q, std::string var, FiniteType type, TermPtr bound,
                      FormulaPtr body);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

// Concrete syntax. Quantifiers: `forall a:0.` and `exists b:0 <= r.` (the
// prefix bound is always the ⪯ relation); atoms: `s =R t`, `s <=R t`,
// `s <=0 t`, `s prec t`; connectives `~`, `&`, `|`, `->`; lambdas
// `\x:TYPE. t`. Application is `f(x)`.
FormulaPtr parse_formula(const std::string& text);
TermPtr parse_term(const std::string& text);

std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

// Type inference for terms under an environment of variable types; throws
// TypeError naming the offending subterm.
using TypeEnv = std::map<std::string, std::vector<FiniteType>>;
FiniteType infer_type(const TermPtr& t, TypeEnv& env);

// Checks a closed formula under the arrow discipline.
void typecheck_formula(const FormulaPtr& f);

}  // namespace lpforge::logic
