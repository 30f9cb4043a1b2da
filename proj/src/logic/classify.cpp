#include "lpforge/logic/classify.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lpforge::logic {

namespace {

bool quantifier_free(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::atom: return true;
    case Formula::Kind::negation: return quantifier_free(f->left);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
      return quantifier_free(f->left) && quantifier_free(f->right);
    case Formula::Kind::quantified: return false;
  }
  return false;
}

void collect_free_vars(const TermPtr& t, std::set<std::string>& bound,
                       std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::variable:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Term::Kind::constant:
    case Term::Kind::numeral:
      return;
    case Term::Kind::apply:
    case Term::Kind::add:
    case Term::Kind::smul:
      collect_free_vars(t->child1, bound, out);
      collect_free_vars(t->child2, bound, out);
      return;
    case Term::Kind::norm:
    case Term::Kind::neg:
      collect_free_vars(t->child1, bound, out);
      return;
    case Term::Kind::lambda: {
      const bool fresh = bound.insert(t->binder).second;
      collect_free_vars(t->child1, bound, out);
      if (fresh) bound.erase(t->binder);
      return;
    }
  }
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free_vars(t, bound, out);
  return out;
}

void collect_var_names(const FormulaPtr& f, std::set<std::string>& out);

void collect_term_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::variable: out.insert(t->name); return;
    case Term::Kind::constant:
    case Term::Kind::numeral: return;
    case Term::Kind::apply:
    case Term::Kind::add:
    case Term::Kind::smul:
      collect_term_names(t->child1, out);
      collect_term_names(t->child2, out);
      return;
    case Term::Kind::norm:
    case Term::Kind::neg:
      collect_term_names(t->child1, out);
      return;
    case Term::Kind::lambda:
      out.insert(t->binder);
      collect_term_names(t->child1, out);
      return;
  }
}

void collect_var_names(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::atom:
      collect_term_names(f->lhs, out);
      collect_term_names(f->rhs, out);
      return;
    case Formula::Kind::negation:
      collect_var_names(f->left, out);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
      collect_var_names(f->left, out);
      collect_var_names(f->right, out);
      return;
    case Formula::Kind::quantified:
      out.insert(f->var);
      if (f->bound) collect_term_names(f->bound, out);
      collect_var_names(f->left, out);
      return;
  }
}

struct Prefix {
  std::vector<QuantEntry> entries;
  FormulaPtr matrix;
};

Prefix peel_prefix(const FormulaPtr& f) {
  Prefix p;
  FormulaPtr cur = f;
  while (cur->kind == Formula::Kind::quantified) {
    p.entries.push_back({cur->quant, cur->var, cur->var_type, cur->bound});
    cur = cur->left;
  }
  p.matrix = cur;
  return p;
}

bool all_admissible(const std::vector<QuantEntry>& entries) {
  return std::all_of(entries.begin(), entries.end(), [](const QuantEntry& e) {
    return is_admissible(e.type);
  });
}

TermPtr substitute(const TermPtr& t,
                   const std::map<std::string, TermPtr>& repl) {
  switch (t->kind) {
    case Term::Kind::variable: {
      auto it = repl.find(t->name);
      return it == repl.end() ? t : it->second;
    }
    case Term::Kind::constant:
    case Term::Kind::numeral:
      return t;
    case Term::Kind::apply:
      return apply(substitute(t->child1, repl), substitute(t->child2, repl));
    case Term::Kind::add:
      return add_term(substitute(t->child1, repl), substitute(t->child2, repl));
    case Term::Kind::smul:
      return smul_term(substitute(t->child1, repl),
                       substitute(t->child2, repl));
    case Term::Kind::norm:
      return norm_of(substitute(t->child1, repl));
    case Term::Kind::neg:
      return neg_term(substitute(t->child1, repl));
    case Term::Kind::lambda: {
      auto inner = repl;
      inner.erase(t->binder);  // shadowing
      return lambda(t->binder, t->binder_type, substitute(t->child1, inner));
    }
  }
  return t;
}

FormulaPtr substitute_formula(const FormulaPtr& f,
                              const std::map<std::string, TermPtr>& repl) {
  switch (f->kind) {
    case Formula::Kind::atom:
      return atom(f->rel, substitute(f->lhs, repl), substitute(f->rhs, repl));
    case Formula::Kind::negation:
      return negation(substitute_formula(f->left, repl));
    case Formula::Kind::conjunction:
      return conjunction(substitute_formula(f->left, repl),
                         substitute_formula(f->right, repl));
    case Formula::Kind::disjunction:
      return disjunction(substitute_formula(f->left, repl),
                         substitute_formula(f->right, repl));
    case Formula::Kind::implication:
      return implication(substitute_formula(f->left, repl),
                         substitute_formula(f->right, repl));
    case Formula::Kind::quantified: {
      auto inner = repl;
      inner.erase(f->var);
      TermPtr bound = f->bound ? substitute(f->bound, repl) : nullptr;
      return quantified(f->quant, f->var, f->var_type, std::move(bound),
                        substitute_formula(f->left, inner));
    }
  }
  return f;
}

}  // namespace

const char* formula_class_name(FormulaClass c) {
  switch (c) {
    case FormulaClass::forall_formula: return "forall-formula";
    case FormulaClass::exists_formula: return "exists-formula";
    case FormulaClass::delta_sentence: return "delta-sentence";
    case FormulaClass::skolem_form: return "skolem-form";
    case FormulaClass::other: return "other";
  }
  return "other";
}

FormulaClass classify(const FormulaPtr& sentence) {
  typecheck_formula(sentence);
  const Prefix p = peel_prefix(sentence);
  if (!quantifier_free(p.matrix)) return FormulaClass::other;

  const auto& es = p.entries;
  const std::size_t m = es.size();

  // delta-sentence: ∀a̲ (nonempty, unbounded) ∃b̲⪯r̲a̲ (nonempty) ∀c̲
  {
    std::size_t i = 0;
    while (i < m && es[i].quant == Quant::forall && !es[i].bound) ++i;
    const std::size_t a_end = i;
    while (i < m && es[i].quant == Quant::exists && es[i].bound) ++i;
    const std::size_t b_end = i;
    while (i < m && es[i].quant == Quant::forall && !es[i].bound) ++i;
    if (i == m && a_end > 0 && b_end > a_end && all_admissible(es)) {
      // each bound may mention the leading universals only
      std::set<std::string> a_names;
      for (std::size_t k = 0; k < a_end; ++k) a_names.insert(es[k].var);
      bool bounds_ok = true;
      for (std::size_t k = a_end; k < b_end && bounds_ok; ++k)
        for (const std::string& v : free_vars(es[k].bound))
          if (!a_names.count(v)) bounds_ok = false;
      if (bounds_ok) return FormulaClass::delta_sentence;
    }
  }

  // skolem-form: ∃B̲⪯r̲ (nonempty) ∀a̲c̲ (unbounded, admissible)
  {
    std::size_t i = 0;
    while (i < m && es[i].quant == Quant::exists && es[i].bound) ++i;
    const std::size_t b_end = i;
    while (i < m && es[i].quant == Quant::forall && !es[i].bound) ++i;
    if (i == m && b_end > 0) {
      bool ok = true;
      for (std::size_t k = 0; k < b_end && ok; ++k)
        if (!free_vars(es[k].bound).empty()) ok = false;  // closed bounds
      for (std::size_t k = b_end; k < m && ok; ++k)
        if (!is_admissible(es[k].type)) ok = false;
      if (ok) return FormulaClass::skolem_form;
    }
  }

  // forall-formula / exists-formula: a homogeneous unbounded admissible list
  if (std::all_of(es.begin(), es.end(), [](const QuantEntry& e) {
        return e.quant == Quant::forall && !e.bound;
      }) &&
      all_admissible(es))
    return FormulaClass::forall_formula;
  if (!es.empty() &&
      std::all_of(es.begin(), es.end(), [](const QuantEntry& e) {
        return e.quant == Quant::exists && !e.bound;
      }) &&
      all_admissible(es))
    return FormulaClass::exists_formula;

  return FormulaClass::other;
}

DeltaSentence DeltaSentence::from_formula(const FormulaPtr& sentence) {
  typecheck_formula(sentence);
  const Prefix p = peel_prefix(sentence);
  if (!quantifier_free(p.matrix))
    throw ParameterError("matrix is not quantifier-free");

  DeltaSentence d;
  d.matrix = p.matrix;
  const auto& es = p.entries;
  std::size_t i = 0;
  while (i < es.size() && es[i].quant == Quant::forall) {
    if (es[i].bound)
      throw ParameterError("universal quantifiers of a delta sentence are unbounded");
    d.a_block.push_back(es[i++]);
  }
  while (i < es.size() && es[i].quant == Quant::exists) {
    if (!es[i].bound)
      throw ParameterError("existential block of a delta sentence must be bounded");
    d.b_block.push_back(es[i++]);
  }
  while (i < es.size() && es[i].quant == Quant::forall) {
    if (es[i].bound)
      throw ParameterError("universal quantifiers of a delta sentence are unbounded");
    d.c_block.push_back(es[i++]);
  }
  if (i != es.size())
    throw ParameterError("prefix does not have the forall-exists-forall shape");

  for (const QuantEntry& e : d.a_block)
    if (!is_admissible(e.type))
      throw ParameterError("type of " + e.var + " is not admissible");
  for (const QuantEntry& e : d.b_block)
    if (!is_admissible(e.type))
      throw ParameterError("type of " + e.var + " is not admissible");
  for (const QuantEntry& e : d.c_block)
    if (!is_admissible(e.type))
      throw ParameterError("type of " + e.var + " is not admissible");

  std::set<std::string> a_names;
  for (const QuantEntry& e : d.a_block) a_names.insert(e.var);
  for (const QuantEntry& e : d.b_block)
    for (const std::string& v : free_vars(e.bound))
      if (!a_names.count(v))
        throw ParameterError("bound of " + e.var +
                             " mentions a variable outside the universal block");
  return d;
}

FormulaPtr DeltaSentence::to_formula() const {
  FormulaPtr f = matrix;
  for (auto it = c_block.rbegin(); it != c_block.rend(); ++it)
    f = quantified(it->quant, it->var, it->type, it->bound, std::move(f));
  for (auto it = b_block.rbegin(); it != b_block.rend(); ++it)
    f = quantified(it->quant, it->var, it->type, it->bound, std::move(f));
  for (auto it = a_block.rbegin(); it != a_block.rend(); ++it)
    f = quantified(it->quant, it->var, it->type, it->bound, std::move(f));
  return f;
}

FormulaPtr skolem_normal_form(const DeltaSentence& delta) {
  std::set<std::string> taken;
  collect_var_names(delta.to_formula(), taken);
  taken.insert("C");  // reserved constant name

  struct SkolemWitness {
    std::string name;
    FiniteType type;
    TermPtr bound;
  };
  std::vector<SkolemWitness> witnesses;
  std::map<std::string, TermPtr> repl;

  for (const QuantEntry& b : delta.b_block) {
    std::string name = b.var;
    if (!name.empty())
      name[0] = static_cast<char>(
          std::toupper(static_cast<unsigned char>(name[0])));
    while (taken.count(name)) name += "'";
    taken.insert(name);

    // type σ(δ_m)...(δ_1), so that B a_1 ... a_m has type σ
    FiniteType ty = b.type;
    for (auto it = delta.a_block.rbegin(); it != delta.a_block.rend(); ++it)
      ty = FiniteType::arrow(it->type, ty);

    // bound λa_1...λa_m. r
    TermPtr bound = b.bound;
    for (auto it = delta.a_block.rbegin(); it != delta.a_block.rend(); ++it)
      bound = lambda(it->var, it->type, std::move(bound));

    // replacement B(a_1)...(a_m)
    TermPtr replacement = var(name);
    for (const QuantEntry& a : delta.a_block)
      replacement = apply(std::move(replacement), var(a.var));

    witnesses.push_back({std::move(name), ty, std::move(bound)});
    repl[b.var] = replacement;
  }

  FormulaPtr body = substitute_formula(delta.matrix, repl);
  for (auto it = delta.c_block.rbegin(); it != delta.c_block.rend(); ++it)
    body = quantified(Quant::forall, it->var, it->type, nullptr,
                      std::move(body));
  for (auto it = delta.a_block.rbegin(); it != delta.a_block.rend(); ++it)
    body = quantified(Quant::forall, it->var, it->type, nullptr,
                      std::move(body));
  for (auto it = witnesses.rbegin(); it != witnesses.rend(); ++it)
    body = quantified(Quant::exists, it->name, it->type, it->bound,
                      std::move(body));
  return body;
}

}  // namespace lpforge::logic
