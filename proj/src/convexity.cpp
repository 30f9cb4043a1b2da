#include "lpforge/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "lpforge/random.hpp"

namespace lpforge {

namespace {

void require_convexity_exponent(const Exponent& p) {
  if (!p.convexity_ready())
    throw ParameterError("convexity operations require p >= 2");
}

bool le_slack(double lhs, double rhs, double tol) {
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  return lhs <= rhs + tol * scale;
}

double powp(double v, double p) { return std::pow(std::fabs(v), p); }

}  // namespace

double eta(double eps, const Exponent& p) {
  require_convexity_exponent(p);
  if (!(eps > 0.0 && eps <= 2.0))
    throw ParameterError("eta: eps must lie in (0,2]");
  return 1.0 - std::pow(1.0 - powp(eps / 2.0, p.value()), 1.0 / p.value());
}

double sigma(double a, double d, const Exponent& p) {
  require_convexity_exponent(p);
  if (!(a > 0.0 && a < 1.0 && d > 0.0 && d < 1.0))
    throw ParameterError("sigma: a and d must lie in (0,1)");
  const double pv = p.value();
  const double base = std::pow(1.0 - powp(a, pv), 1.0 / pv) + d;
  if (base >= 1.0) return a;
  return a - std::pow(1.0 - powp(base, pv), 1.0 / pv);
}

bool check_power_inequality(double x1, double x2, const Exponent& p,
                            double tol) {
  require_convexity_exponent(p);
  if (x1 < 0.0 || x2 < 0.0)
    throw ParameterError("check_power_inequality: inputs must be >= 0");
  const double pv = p.value();
  return le_slack(std::pow(x1, pv) + std::pow(x2, pv),
                  std::pow(x1 * x1 + x2 * x2, pv / 2.0), tol);
}

bool check_clarkson(double a, double b, const Exponent& p, double tol) {
  require_convexity_exponent(p);
  const double pv = p.value();
  const double lhs = powp((a + b) / 2.0, pv) + powp((a - b) / 2.0, pv);
  const double rhs = 0.5 * (powp(a, pv) + powp(b, pv));
  return le_slack(lhs, rhs, tol);
}

bool check_sigma_bound(double a, double d, double delta, const Exponent& p,
                       double tol) {
  const double s = sigma(a, d, p);
  if (!(delta > 0.0 && delta < s))
    throw PreconditionError("check_sigma_bound: delta must lie in (0, sigma)");
  const double pv = p.value();
  const double lhs = std::pow(1.0 - powp(a - delta, pv), 1.0 / pv);
  const double rhs = std::pow(1.0 - powp(a, pv), 1.0 / pv) + d;
  return le_slack(lhs, rhs, tol);
}

double delta_for(double eps, double c, const Exponent& p) {
  require_convexity_exponent(p);
  if (!(eps > 0.0 && eps <= 2.0))
    throw ParameterError("delta_for: eps must lie in (0,2]");
  if (!(c > 0.0 && c < 1.0))
    throw ParameterError("delta_for: c must lie in (0,1)");
  return std::min(c / 2.0, sigma(eps / 2.0, c / 2.0, p) / 2.0);
}

ConvexityCertificate certify_uniform_convexity(const SimpleFunction<double>& x1,
                                               const SimpleFunction<double>& x2,
                                               double eps, double c,
                                               const Exponent& p,
                                               const ConvexityOptions& opt) {
  require_convexity_exponent(p);
  require_same_space(x1, x2, "certify_uniform_convexity");
  if (!(eps > 0.0 && eps <= 2.0))
    throw ParameterError("certify_uniform_convexity: eps must lie in (0,2]");
  if (!(c > 0.0 && c < 1.0))
    throw ParameterError("certify_uniform_convexity: c must lie in (0,1)");
  const double pv = p.value();
  const double tol = opt.tolerance;
  if (lp_norm(x1, p) > 1.0 + 1e-9 || lp_norm(x2, p) > 1.0 + 1e-9)
    throw PreconditionError("inputs must have norm at most 1");
  if (lp_norm(sub(x1, x2), p) < eps * (1.0 - 1e-12))
    throw PreconditionError("inputs must be at least eps apart");

  ConvexityCertificate cert;
  cert.eps = eps;
  cert.c = c;
  cert.p = p;
  cert.delta = delta_for(eps, c, p);
  cert.N = static_cast<int>(std::ceil(1.0 / cert.delta));

  VerifyOptions vopt;
  vopt.seed = opt.seed;
  vopt.trials = opt.isometry_trials;
  cert.instance = verify_axiom_instance({x1, x2}, cert.N, p, vopt);
  const auto& w = cert.instance.witness;

  const double delta = cert.delta;
  const double rho = eps - 2.0 * delta;

  auto step = [&cert, tol](std::string name, double lhs, double rhs) {
    cert.chain.push_back({std::move(name), lhs, rhs, le_slack(lhs, rhs, tol)});
  };

  // ‖x_k - y_k‖ <= δ from the choice N = ⌈1/δ⌉
  const SimpleFunction<double> y1 = w.reconstruct(0);
  const SimpleFunction<double> y2 = w.reconstruct(1);
  step("approximation-1", lp_norm(sub(x1, y1), p), delta);
  step("approximation-2", lp_norm(sub(x2, y2), p), delta);

  // coordinatewise Clarkson: Σ(|..|^p+|..|^p)w <= ½Σ(|λ|^p+|μ|^p)w <= 1
  {
    double lhs = 0.0, mid = 0.0;
    const auto& weights = w.certificate.weights;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      const double lam = w.coords[0][l];
      const double mu = w.coords[1][l];
      lhs += (powp((lam + mu) / 2.0, pv) + powp((lam - mu) / 2.0, pv)) *
             weights[l];
      mid += 0.5 * (powp(lam, pv) + powp(mu, pv)) * weights[l];
    }
    step("clarkson-coordinates", lhs, mid);
    step("midpoint-power", lhs, 1.0);
  }

  // ε <= ‖x1-x2‖ <= ‖y1-y2‖ + 2δ, so the outputs stay ρ = ε-2δ apart
  step("separation", rho, lp_norm(sub(y1, y2), p));

  // Clarkson + separation give the midpoint bound at ρ
  const double mid_norm = lp_norm(scale(0.5, add(y1, y2)), p);
  step("midpoint-bound", mid_norm,
       std::pow(1.0 - powp(rho / 2.0, pv), 1.0 / pv));

  // transfer back to the inputs at cost δ
  const double input_mid_norm = lp_norm(scale(0.5, add(x1, x2)), p);
  step("transfer", input_mid_norm, mid_norm + delta);

  // σ-step: (1-(ε/2-δ)^p)^{1/p} <= (1-(ε/2)^p)^{1/p} + c/2
  step("sigma-step", std::pow(1.0 - powp(eps / 2.0 - delta, pv), 1.0 / pv),
       std::pow(1.0 - powp(eps / 2.0, pv), 1.0 / pv) + c / 2.0);

  // landing clause, using δ <= c/2
  step("final", input_mid_norm,
       std::pow(1.0 - powp(eps / 2.0, pv), 1.0 / pv) + c);

  cert.pass = cert.instance.verdict.pass() &&
              std::all_of(cert.chain.begin(), cert.chain.end(),
                          [](const ChainStep& s) { return s.pass; });
  return cert;
}

namespace {

double vec_norm_p(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += powp(x, p);
  return std::pow(s, 1.0 / p);
}

double midpoint_gap(const std::vector<double>& u, const std::vector<double>& v,
                    double p) {
  std::vector<double> mid(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) mid[i] = (u[i] + v[i]) / 2.0;
  return 1.0 - vec_norm_p(mid, p);
}

bool feasible(const std::vector<double>& u, const std::vector<double>& v,
              double p, double eps) {
  if (vec_norm_p(u, p) > 1.0 || vec_norm_p(v, p) > 1.0) return false;
  std::vector<double> diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - v[i];
  return vec_norm_p(diff, p) >= eps;
}

}  // namespace

ModulusOracleResult brute_force_modulus(const Exponent& p, int dim, double eps,
                                        const OracleOptions& opt) {
  require_convexity_exponent(p);
  if (dim != 2 && dim != 3)
    throw ParameterError("brute_force_modulus: dimension must be 2 or 3");
  if (!(eps > 0.0 && eps < 2.0 + 1e-12))
    throw ParameterError("brute_force_modulus: eps must lie in (0,2)");
  const double pv = p.value();

  ModulusOracleResult result;

  // deterministic extremal family: u=(s,t,0..), v=(s,-t,0..) with t=ε/2 on
  // the unit sphere
  const double t = eps / 2.0;
  const double s = std::pow(std::max(0.0, 1.0 - powp(t, pv)), 1.0 / pv);
  std::vector<double> u(dim, 0.0), v(dim, 0.0);
  u[0] = s;
  u[1] = t;
  v[0] = s;
  v[1] = -t;
  result.extremal_value = midpoint_gap(u, v, pv);
  result.minimum = result.extremal_value;

  struct ShardResult {
    double minimum;
    std::vector<double> u, v;
    std::size_t accepted = 0;
  };

  // seeded rejection sampling from the cube onto feasible ball pairs; each
  // shard owns a derived seed, so the combined result does not depend on
  // scheduling
  auto run_shard = [&](std::uint64_t shard, std::size_t count) {
    Rng rng = Rng(opt.seed).split(shard);
    ShardResult best{result.extremal_value, u, v, 0};
    std::vector<double> a(dim), b(dim);
    for (std::size_t trial = 0; trial < count; ++trial) {
      for (int i = 0; i < dim; ++i) {
        a[i] = rng.uniform(-1.0, 1.0);
        b[i] = rng.uniform(-1.0, 1.0);
      }
      if (!feasible(a, b, pv, eps)) continue;
      ++best.accepted;
      const double gap = midpoint_gap(a, b, pv);
      if (gap < best.minimum) {
        best.minimum = gap;
        best.u = a;
        best.v = b;
      }
    }
    return best;
  };

  const int jobs = std::max(1, opt.jobs);
  std::vector<ShardResult> shards(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    shards[0] = run_shard(0, opt.samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t per = opt.samples / static_cast<std::size_t>(jobs);
    for (int sh = 0; sh < jobs; ++sh) {
      const std::size_t count =
          sh + 1 == jobs ? opt.samples - per * static_cast<std::size_t>(jobs - 1)
                         : per;
      pool.emplace_back([&shards, sh, count, &run_shard] {
        shards[static_cast<std::size_t>(sh)] =
            run_shard(static_cast<std::uint64_t>(sh), count);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> best_u = u, best_v = v;
  for (const ShardResult& sr : shards) {
    result.accepted += sr.accepted;
    if (sr.minimum < result.minimum) {
      result.minimum = sr.minimum;
      best_u = sr.u;
      best_v = sr.v;
    }
  }

  // local hill-climb from the best pair, shrinking the proposal step
  Rng rng = Rng(opt.seed).split(0x7e57);
  double step = 0.1;
  std::vector<double> cu = best_u, cv = best_v;
  double current = result.minimum;
  for (int it = 0; it < opt.descent_steps; ++it) {
    std::vector<double> pu = cu, pvv = cv;
    for (int i = 0; i < dim; ++i) {
      pu[i] += rng.uniform(-step, step);
      pvv[i] += rng.uniform(-step, step);
    }
    // pull proposals back into the unit ball before the feasibility test
    const double nu = vec_norm_p(pu, pv);
    if (nu > 1.0)
      for (double& x : pu) x /= nu;
    const double nv = vec_norm_p(pvv, pv);
    if (nv > 1.0)
      for (double& x : pvv) x /= nv;
    if (feasible(pu, pvv, pv, eps)) {
      const double gap = midpoint_gap(pu, pvv, pv);
      if (gap < current) {
        current = gap;
        cu = pu;
        cv = pvv;
        continue;
      }
    }
    step *= 0.97;
  }
  result.minimum = std::min(result.minimum, current);

  return result;
}

}  // namespace lpforge
