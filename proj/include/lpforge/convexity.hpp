#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpforge/verify.hpp"

namespace lpforge {

// η(ε) = 1 - (1-(ε/2)^p)^{1/p}, the standard modulus of uniform convexity
// for p >= 2. Domain: ε ∈ (0,2].
double eta(double eps, const Exponent& p);

// σ(a,d) = a - (1-((1-a^p)^{1/p}+d)^p)^{1/p} for a,d ∈ (0,1). When
// (1-a^p)^{1/p}+d >= 1 the inner expression turns negative and the formula
// leaves its real domain; the value is clamped to a there, which keeps the
// σ-transfer inequality valid for every δ ∈ (0,a).
double sigma(double a, double d, const Exponent& p);

// x1^p + x2^p <= (x1^2 + x2^2)^{p/2} for x1,x2 >= 0, p >= 2
bool check_power_inequality(double x1, double x2, const Exponent& p,
                            double tol = 1e-12);

// |(a+b)/2|^p + |(a-b)/2|^p <= (|a|^p+|b|^p)/2 for p >= 2
bool check_clarkson(double a, double b, const Exponent& p, double tol = 1e-12);

// (1-(a-δ)^p)^{1/p} <= (1-a^p)^{1/p} + d for δ ∈ (0, σ(a,d))
bool check_sigma_bound(double a, double d, double delta, const Exponent& p,
                       double tol = 1e-12);

// δ = min{c/2, σ(ε/2,c/2)/2}; always in (0, ε/2)
double delta_for(double eps, double c, const Exponent& p);

struct ChainStep {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

// The evaluated inequality chain deriving
//   ‖(x1+x2)/2‖ <= (1-(ε/2)^p)^{1/p} + c
// from the certified finite-dimensional approximation at accuracy δ.
struct ConvexityCertificate {
  double eps = 0.0;
  double c = 0.0;
  double delta = 0.0;
  int N = 0;
  Exponent p = Exponent::integer(2);
  AxiomInstanceResult instance;
  std::vector<ChainStep> chain;
  bool pass = false;
};

struct ConvexityOptions {
  std::uint64_t seed = 0;
  double tolerance = 1e-12;   // comparison slack in the chain
  int isometry_trials = 20;
};

ConvexityCertificate certify_uniform_convexity(const SimpleFunction<double>& x1,
                                               const SimpleFunction<double>& x2,
                                               double eps, double c,
                                               const Exponent& p,
                                               const ConvexityOptions& opt = {});

struct OracleOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  int descent_steps = 200;
  int jobs = 1;  // sampling shards run in parallel, one derived seed each
};

struct ModulusOracleResult {
  double minimum = 1.0;         // min of 1-‖(u+v)/2‖ over feasible pairs
  double extremal_value = 1.0;  // the deterministic two-plane family's value
  std::size_t accepted = 0;     // feasible sampled pairs
};

// Brute-force search for the modulus over the unit ball of ℝ^m_p: combines
// the deterministic extremal family u=(s,t), v=(s,-t) with seeded rejection
// sampling and local hill-climbing on the midpoint norm.
ModulusOracleResult brute_force_modulus(const Exponent& p, int dim, double eps,
                                        const OracleOptions& opt = {});

}  // namespace lpforge
