#pragma once

#include <cstdint>
#include <vector>

#include "lpforge/scalar.hpp"

namespace lpforge {

using RatMatrix = std::vector<std::vector<Rat>>;

// Estimate of an operator p->p norm. `exact` marks the analytically solved
// cases (monomial matrices for any p; arbitrary matrices for p = 1), where
// lower == upper.
struct NormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};

struct BmOptions {
  int restarts = 16;
  int iterations = 80;
  std::uint64_t seed = 0;
};

struct BmBound {
  NormEstimate forward;   // ‖L‖
  NormEstimate inverse;   // ‖L⁻¹‖
  double bound = 1.0;     // upper estimate of ‖L‖·‖L⁻¹‖, always >= 1
  double lower = 1.0;     // sampled lower estimate of the same product
};

// Exact rational inverse via Gauss-Jordan elimination; throws ParameterError
// when L is singular.
RatMatrix invert_exact(const RatMatrix& L);

NormEstimate operator_p_norm(const RatMatrix& L, const Exponent& p,
                             const BmOptions& opt = {});

// ‖L‖·‖L⁻¹‖ upper bound for the p-norm Banach-Mazur distance between the
// domain and range of L.
BmBound bm_distance_bound(const RatMatrix& L, const Exponent& p,
                          const BmOptions& opt = {});

}  // namespace lpforge
