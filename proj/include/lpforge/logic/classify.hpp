#pragma once

#include <vector>

#include "lpforge/logic/formula.hpp"

namespace lpforge::logic {

// Prefix classes of the fragment. Degenerate overlaps resolve toward the
// more specific label: a sentence whose prefix opens with a bounded
// existential block is a skolem-form; a delta-sentence needs a nonempty
// leading universal block and a nonempty bounded existential block; a
// quantifier-free sentence counts as a (vacuous) forall-formula.
enum class FormulaClass {
  forall_formula,
  exists_formula,
  delta_sentence,
  skolem_form,
  other,
};

const char* formula_class_name(FormulaClass c);

// Typechecks, then classifies. Throws TypeError on ill-typed input.
FormulaClass classify(const FormulaPtr& sentence);

struct QuantEntry {
  Quant quant = Quant::forall;
  std::string var;
  FiniteType type;
  TermPtr bound;  // null when unbounded
};

// ∀a̲ ∃b̲⪯r̲a̲ ∀c̲ B₀ with quantifier-free matrix. Blocks may be empty here;
// the strict delta-sentence label additionally demands nonempty a̲ and b̲.
struct DeltaSentence {
  std::vector<QuantEntry> a_block;
  std::vector<QuantEntry> b_block;
  std::vector<QuantEntry> c_block;
  FormulaPtr matrix;

  // Splits a sentence into the three blocks; throws ParameterError when the
  // prefix does not have the ∀*∃*∀* shape or the matrix is not
  // quantifier-free. Validates types, bounds and variable scopes.
  static DeltaSentence from_formula(const FormulaPtr& sentence);

  FormulaPtr to_formula() const;
};

// ∃B̲^{σ̲(δ̲)} ⪯ λa̲.r̲ ∀a̲ ∀c̲ B₀(a̲, B̲a̲, c̲): each existential witness
// becomes a function of the leading universals, its bound the lambda
// abstraction of the original bound, and the matrix substitutes B̲a̲ for b̲.
FormulaPtr skolem_normal_form(const DeltaSentence& delta);

}  // namespace lpforge::logic
