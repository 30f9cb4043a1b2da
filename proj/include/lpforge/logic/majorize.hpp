#pragma once

#include <variant>
#include <vector>

#include "lpforge/logic/type.hpp"
#include "lpforge/measure.hpp"

namespace lpforge::logic {

// Concrete ground values for the ⪯ / ≳ checks: naturals at type 0, simple
// functions at type X, finite prefixes of number sequences at type 1 = 0(0)
// and of point sequences at type X(0). Higher types are out of scope.
using NatSeq = std::vector<unsigned long long>;
using PointSeq = std::vector<SimpleFunction<double>>;
using GroundValue = std::variant<unsigned long long, SimpleFunction<double>,
                                 NatSeq, PointSeq>;

namespace detail {

inline const FiniteType& type_real() {
  static const FiniteType t =
      FiniteType::arrow(FiniteType::nat(), FiniteType::nat());
  return t;
}

inline const FiniteType& type_point_seq() {
  static const FiniteType t =
      FiniteType::arrow(FiniteType::nat(), FiniteType::space());
  return t;
}

template <class T>
const T& expect(const GroundValue& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw ParameterError(std::string("value does not match type ") + what);
}

inline void check_prefix(std::size_t len, std::size_t horizon) {
  if (len <= horizon)
    throw ParameterError("sequence prefix shorter than the horizon");
}

}  // namespace detail

// x ⪯ y at the supported types: <= on naturals, norm comparison on space
// elements, and the pointwise clause on sequence types up to the horizon.
inline bool check_preceq(const GroundValue& lhs, const GroundValue& rhs,
                         const FiniteType& tau, const Exponent& p,
                         std::size_t horizon = 64) {
  using detail::expect;
  if (tau == FiniteType::nat())
    return expect<unsigned long long>(lhs, "0") <=
           expect<unsigned long long>(rhs, "0");
  if (tau == FiniteType::space()) {
    const auto& f = expect<SimpleFunction<double>>(lhs, "X");
    const auto& g = expect<SimpleFunction<double>>(rhs, "X");
    return lp_norm(f, p) <= lp_norm(g, p);
  }
  if (tau == detail::type_real()) {
    const auto& f = expect<NatSeq>(lhs, "1");
    const auto& g = expect<NatSeq>(rhs, "1");
    detail::check_prefix(f.size(), horizon);
    detail::check_prefix(g.size(), horizon);
    for (std::size_t n = 0; n <= horizon; ++n)
      if (f[n] > g[n]) return false;
    return true;
  }
  if (tau == detail::type_point_seq()) {
    const auto& f = expect<PointSeq>(lhs, "X(0)");
    const auto& g = expect<PointSeq>(rhs, "X(0)");
    detail::check_prefix(f.size(), horizon);
    detail::check_prefix(g.size(), horizon);
    for (std::size_t n = 0; n <= horizon; ++n)
      if (lp_norm(f[n], p) > lp_norm(g[n], p)) return false;
    return true;
  }
  throw UnsupportedTypeError("preceq is unsupported at type " +
                             print_type(tau));
}

// x* ≳ x: >= on naturals at type 0; a natural dominating ‖x‖ at type X; the
// monotone-majorization clause, restricted to the finite horizon, at the
// sequence types. The restriction makes this a sound partial check.
inline bool check_majorizes(const GroundValue& candidate,
                            const GroundValue& value, const FiniteType& tau,
                            const Exponent& p, std::size_t horizon = 64) {
  using detail::expect;
  if (tau == FiniteType::nat())
    return expect<unsigned long long>(candidate, "0") >=
           expect<unsigned long long>(value, "0");
  if (tau == FiniteType::space()) {
    const auto star = expect<unsigned long long>(candidate, "0 (hat of X)");
    const auto& x = expect<SimpleFunction<double>>(value, "X");
    return static_cast<double>(star) >= lp_norm(x, p);
  }
  if (tau == detail::type_real()) {
    const auto& star = expect<NatSeq>(candidate, "1");
    const auto& x = expect<NatSeq>(value, "1");
    detail::check_prefix(star.size(), horizon);
    detail::check_prefix(x.size(), horizon);
    // ∀ n* >= n: star(n*) >= x(n) and star(n*) >= star(n)
    unsigned long long run_max_x = 0, run_max_star = 0;
    for (std::size_t n = 0; n <= horizon; ++n) {
      run_max_x = std::max(run_max_x, x[n]);
      run_max_star = std::max(run_max_star, star[n]);
      if (star[n] < run_max_x || star[n] < run_max_star) return false;
    }
    return true;
  }
  if (tau == detail::type_point_seq()) {
    const auto& star = expect<NatSeq>(candidate, "1 (hat of X(0))");
    const auto& x = expect<PointSeq>(value, "X(0)");
    detail::check_prefix(star.size(), horizon);
    detail::check_prefix(x.size(), horizon);
    double run_max_norm = 0.0;
    unsigned long long run_max_star = 0;
    for (std::size_t n = 0; n <= horizon; ++n) {
      run_max_norm = std::max(run_max_norm, lp_norm(x[n], p));
      run_max_star = std::max(run_max_star, star[n]);
      if (static_cast<double>(star[n]) < run_max_norm ||
          star[n] < run_max_star)
        return false;
    }
    return true;
  }
  throw UnsupportedTypeError("majorization is unsupported at type " +
                             print_type(tau));
}

}  // namespace lpforge::logic
