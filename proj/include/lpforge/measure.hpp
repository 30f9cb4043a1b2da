#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lpforge/errors.hpp"
#include "lpforge/scalar.hpp"

namespace lpforge {

// A finite measure space: ordered atoms with strictly positive rational
// weights. All simple functions are value-per-atom vectors over one of these.
struct MeasureSpace {
  std::vector<std::string> atoms;
  std::vector<Rat> weights;

  std::size_t size() const { return atoms.size(); }

  void validate() const {
    if (atoms.size() != weights.size())
      throw StructuralError("atom/weight count mismatch");
    for (const Rat& w : weights)
      if (sgn(w) <= 0) throw StructuralError("atom weight must be positive");
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i + 1; j < atoms.size(); ++j)
        if (atoms[i] == atoms[j])
          throw StructuralError("duplicate atom identifier: " + atoms[i]);
  }

  bool operator==(const MeasureSpace& o) const {
    return atoms == o.atoms && weights == o.weights;
  }
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

inline SpacePtr make_space(std::vector<std::string> atoms,
                           std::vector<Rat> weights) {
  auto sp = std::make_shared<MeasureSpace>(
      MeasureSpace{std::move(atoms), std::move(weights)});
  sp->validate();
  return sp;
}

// n atoms "a0".."a{n-1}", all of weight 1. Test and example helper.
inline SpacePtr unit_weight_space(std::size_t n) {
  std::vector<std::string> atoms;
  std::vector<Rat> weights;
  for (std::size_t i = 0; i < n; ++i) {
    atoms.push_back("a" + std::to_string(i));
    weights.push_back(make_rat(1));
  }
  return make_space(std::move(atoms), std::move(weights));
}

// A simple function: one scalar per atom. S is Rat (exact mode) or double.
template <class S>
struct SimpleFunction {
  SpacePtr space;
  std::vector<S> values;

  void validate() const {
    if (!space) throw StructuralError("simple function without a space");
    if (values.size() != space->size())
      throw StructuralError("value list length differs from atom count");
  }
};

template <class S>
SimpleFunction<S> make_function(SpacePtr space, std::vector<S> values) {
  SimpleFunction<S> f{std::move(space), std::move(values)};
  f.validate();
  return f;
}

template <class S>
SimpleFunction<S> zero_function(SpacePtr space) {
  std::vector<S> v(space->size(), scalar_from_int<S>(0));
  return SimpleFunction<S>{std::move(space), std::move(v)};
}

template <class S>
bool same_space(const SimpleFunction<S>& f, const SimpleFunction<S>& g) {
  return f.space == g.space || (f.space && g.space && *f.space == *g.space);
}

template <class S>
void require_same_space(const SimpleFunction<S>& f, const SimpleFunction<S>& g,
                        const char* op) {
  if (!same_space(f, g))
    throw StructuralError(std::string(op) + ": operands on different spaces");
}

// --- atomwise arithmetic; exactness preserved in rational mode ---

template <class S>
SimpleFunction<S> add(const SimpleFunction<S>& f, const SimpleFunction<S>& g) {
  require_same_space(f, g, "add");
  SimpleFunction<S> r = f;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] += g.values[j];
  return r;
}

template <class S>
SimpleFunction<S> sub(const SimpleFunction<S>& f, const SimpleFunction<S>& g) {
  require_same_space(f, g, "sub");
  SimpleFunction<S> r = f;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] -= g.values[j];
  return r;
}

template <class S>
SimpleFunction<S> scale(const S& alpha, const SimpleFunction<S>& f) {
  SimpleFunction<S> r = f;
  for (S& v : r.values) v *= alpha;
  return r;
}

template <class S>
SimpleFunction<S> pointwise_abs(const SimpleFunction<S>& f) {
  SimpleFunction<S> r = f;
  for (S& v : r.values) v = abs_scalar(v);
  return r;
}

// ∫ |f|^p dμ = Σ_j w_j |f_j|^p. Exact rational when S = Rat and p integer.
template <class S>
S lp_norm_pow(const SimpleFunction<S>& f, const Exponent& p) {
  f.validate();
  S total = scalar_from_int<S>(0);
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    if constexpr (is_exact_scalar_v<S>)
      total += f.space->weights[j] * pow_abs(f.values[j], p);
    else
      total += to_double(f.space->weights[j]) * pow_abs(f.values[j], p);
  }
  return total;
}

// ‖f‖_p as a floating value. Exact comparisons must be routed through
// lp_norm_pow instead.
template <class S>
double lp_norm(const SimpleFunction<S>& f, const Exponent& p) {
  return pth_root(to_double(lp_norm_pow(f, p)), p);
}

// ṽ = v / max{‖v‖, 1}: v unchanged when ‖v‖ <= 1, else rescaled to norm 1.
inline SimpleFunction<double> normalize_tilde(const SimpleFunction<double>& v,
                                              const Exponent& p) {
  const double norm = lp_norm(v, p);
  if (norm <= 1.0) return v;
  return scale(1.0 / norm, v);
}

// Exact-mode tilde. Succeeds when ‖v‖ <= 1 (identity) or the norm is itself
// rational; otherwise the caller must drop to the floating path.
inline std::optional<SimpleFunction<Rat>> normalize_tilde_exact(
    const SimpleFunction<Rat>& v, const Exponent& p) {
  const Rat np = lp_norm_pow(v, p);
  if (np <= 1) return v;
  if (auto root = exact_pth_root(np, p)) return scale(Rat(1 / *root), v);
  return std::nullopt;
}

inline SimpleFunction<double> to_float(const SimpleFunction<Rat>& f) {
  std::vector<double> values;
  values.reserve(f.values.size());
  for (const Rat& v : f.values) values.push_back(to_double(v));
  return SimpleFunction<double>{f.space, std::move(values)};
}

inline std::vector<SimpleFunction<double>> to_float(
    const std::vector<SimpleFunction<Rat>>& fs) {
  std::vector<SimpleFunction<double>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(to_float(f));
  return out;
}

}  // namespace lpforge
