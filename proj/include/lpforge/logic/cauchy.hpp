#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "lpforge/errors.hpp"

namespace lpforge::logic {

template <class P>
struct CauchyHatResult {
  std::vector<P> points;              // x̂_0 ... x̂_horizon
  std::vector<std::size_t> source;    // x̂_n = x_{source[n]}
  std::optional<std::size_t> freeze;  // least k whose guard failed
};

// The guard-based transformation forcing any sequence into a Cauchy one of
// rate 2^{-n+3}: x̂_n = x_n while every guard k < n passes, else x̂_n = x_k
// for the least failing k. The guard at k compares a dyadic approximation
// of d(x_k, x_{k+1}) -- the nearest multiple of 2^{-(k+1)}, whose error is
// at most 2^{-(k+2)} -- against 6·2^{-k-1}; ties round away from zero, so
// the guard passes exactly when d(x_k, x_{k+1}) < 5.5·2^{-(k+1)}. A passing
// guard therefore certifies d(x_k, x_{k+1}) < 7·2^{-k-1}, and summing the
// geometric tail gives d(x̂_n, x̂_m) <= 2^{-min(n,m)+3}.
template <class P, class Metric>
CauchyHatResult<P> cauchy_hat(const std::vector<P>& xs, Metric distance,
                              std::size_t horizon) {
  if (xs.empty()) throw ParameterError("cauchy_hat: empty sequence");
  if (horizon >= xs.size())
    throw ParameterError("cauchy_hat: horizon exceeds the supplied prefix");

  std::optional<std::size_t> freeze;
  for (std::size_t k = 0; k < horizon; ++k) {
    const double d = distance(xs[k], xs[k + 1]);
    const double threshold = 5.5 * std::ldexp(1.0, -(static_cast<int>(k) + 1));
    if (!(d < threshold)) {
      freeze = k;
      break;
    }
  }

  CauchyHatResult<P> out;
  out.freeze = freeze;
  out.points.reserve(horizon + 1);
  out.source.reserve(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    const std::size_t k = freeze && n > *freeze ? *freeze : n;
    out.points.push_back(xs[k]);
    out.source.push_back(k);
  }
  return out;
}

// 2^{-min(n,m)+3}, the guaranteed Cauchy rate of the transformed sequence
inline double cauchy_rate_bound(std::size_t n, std::size_t m) {
  return std::ldexp(8.0, -static_cast<int>(std::min(n, m)));
}

}  // namespace lpforge::logic
