#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "lpforge/certificate.hpp"
#include "lpforge/random.hpp"

namespace lpforge {

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerdictReport {
  std::vector<ClauseResult> clauses;

  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }

  const ClauseResult* first_failure() const {
    for (const auto& c : clauses)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  int trials = 50;                // random coordinate vectors for the isometry
  std::uint64_t seed = 0;
  double tolerance = 1e-9;        // relative, floating path only
  bool check_inputs = true;       // error-bound clause needs the inputs
  // replaces the random trials by the finite family {e_l, e_l - e_m,
  // e_l + 2e_m}, which pins the identity for disjointly supported bases
  bool exhaustive = false;
};

namespace detail {

inline bool close_rel(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

inline bool le_rel(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return a <= b + tol * scale;
}

template <class S>
std::string show(const S& v) {
  if constexpr (is_exact_scalar_v<S>) {
    return v.get_str();
  } else {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }
}

}  // namespace detail

// Re-derives every clause of an approximation witness: disjoint supports,
// recomputed positive weights, dimension bound, the weighted isometry
// identity on random coordinate vectors, the per-input error bound, and the
// output-norm contract of the witness mode. Exact in rational mode.
template <class S>
VerdictReport verify_certificate(const ApproximationWitness<S>& w,
                                 const std::vector<SimpleFunction<S>>& inputs,
                                 const VerifyOptions& opt = {}) {
  VerdictReport report;
  const auto& cert = w.certificate;
  const Exponent& p = cert.p;
  const std::size_t dim = cert.cells.size();

  auto clause = [&report](std::string name, bool pass, std::string detail) {
    report.clauses.push_back({std::move(name), pass, std::move(detail)});
  };

  // cells-disjoint: no atom in two cells; each z_l supported inside its cell
  {
    bool pass = cert.basis.size() == dim && cert.weights.size() == dim;
    std::string detail = pass ? "" : "certificate arrays disagree in length";
    std::vector<int> seen(cert.space->size(), 0);
    for (std::size_t l = 0; pass && l < dim; ++l) {
      for (std::size_t a : cert.cells[l].atoms) {
        if (a >= seen.size() || ++seen[a] > 1) {
          pass = false;
          detail = "atom " + std::to_string(a) + " in two cells";
          break;
        }
      }
      for (std::size_t a = 0; pass && a < cert.space->size(); ++a) {
        const bool in_cell =
            std::find(cert.cells[l].atoms.begin(), cert.cells[l].atoms.end(),
                      a) != cert.cells[l].atoms.end();
        if (!in_cell && cert.basis[l].values[a] != scalar_from_int<S>(0)) {
          pass = false;
          detail = "basis " + std::to_string(l) + " leaks outside its cell";
        }
      }
    }
    clause("cells-disjoint", pass, std::move(detail));
  }

  // weights: w_l = ‖z_l‖^p and w_l > 0
  {
    bool pass = true;
    std::string detail;
    for (std::size_t l = 0; l < dim && pass; ++l) {
      const S recomputed = lp_norm_pow(cert.basis[l], p);
      bool match;
      if constexpr (is_exact_scalar_v<S>)
        match = recomputed == cert.weights[l] && sgn(cert.weights[l]) > 0;
      else
        match = detail::close_rel(recomputed, cert.weights[l], opt.tolerance) &&
                cert.weights[l] > 0.0;
      if (!match) {
        pass = false;
        detail = "weight " + std::to_string(l) + " = " +
                 detail::show(cert.weights[l]) + ", recomputed " +
                 detail::show(recomputed);
      }
    }
    clause("weights", pass, std::move(detail));
  }

  // dimension: |cells| <= dim bound and <= |Ω|
  {
    const bool pass = BigInt(static_cast<unsigned long>(dim)) <= w.dim_bound &&
                      dim <= cert.space->size();
    clause("dimension-bound", pass,
           pass ? "" : std::to_string(dim) + " cells exceed the bound");
  }

  // isometry: ‖Σ λ_l z_l‖^p = Σ |λ_l|^p w_l on random coordinate vectors
  // (or the exhaustive singleton/pair family)
  {
    bool pass = true;
    std::string detail;
    auto check_lambda = [&](const std::vector<S>& lambda, const char* what) {
      SimpleFunction<S> combo = zero_function<S>(cert.space);
      S rhs = scalar_from_int<S>(0);
      for (std::size_t l = 0; l < dim; ++l) {
        if (lambda[l] == scalar_from_int<S>(0)) continue;
        rhs += pow_abs(lambda[l], p) * cert.weights[l];
        for (std::size_t a : cert.cells[l].atoms)
          combo.values[a] += lambda[l] * cert.basis[l].values[a];
      }
      const S lhs = lp_norm_pow(combo, p);
      bool match;
      if constexpr (is_exact_scalar_v<S>)
        match = lhs == rhs;
      else
        match = detail::close_rel(lhs, rhs, opt.tolerance);
      if (match) return true;
      pass = false;
      detail = std::string(what) + ": lhs " + detail::show(lhs) + " != rhs " +
               detail::show(rhs);
      return false;
    };

    if (opt.exhaustive) {
      std::vector<S> lambda(dim, scalar_from_int<S>(0));
      for (std::size_t l = 0; l < dim && pass; ++l) {
        lambda[l] = scalar_from_int<S>(1);
        check_lambda(lambda, "singleton");
        for (std::size_t m = l + 1; m < dim && pass; ++m) {
          lambda[m] = scalar_from_int<S>(-1);
          check_lambda(lambda, "pair");
          lambda[m] = scalar_from_int<S>(2);
          if (pass) check_lambda(lambda, "pair");
          lambda[m] = scalar_from_int<S>(0);
        }
        lambda[l] = scalar_from_int<S>(0);
      }
    } else {
      Rng rng(opt.seed);
      std::vector<S> lambda(dim);
      for (int t = 0; t < opt.trials && pass; ++t) {
        for (std::size_t l = 0; l < dim; ++l) {
          if constexpr (is_exact_scalar_v<S>)
            lambda[l] = rng.uniform_rat(9, 9);
          else
            lambda[l] = rng.uniform(-1.0, 1.0);
        }
        check_lambda(lambda, ("trial " + std::to_string(t)).c_str());
      }
    }
    clause("isometry", pass, std::move(detail));
  }

  // error-bound: ‖x_i - y_i‖^p <= claimed bound
  if (opt.check_inputs) {
    bool pass = inputs.size() == w.coords.size();
    std::string detail = pass ? "" : "input count differs from witness";
    for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
      const S err = lp_norm_pow(sub(inputs[i], w.reconstruct(i)), p);
      bool ok;
      if constexpr (is_exact_scalar_v<S>)
        ok = err <= w.error_bound_pow;
      else
        ok = detail::le_rel(err, w.error_bound_pow, opt.tolerance);
      if (!ok) {
        pass = false;
        detail = "input " + std::to_string(i) + ": error^p " +
                 detail::show(err) + " > bound " +
                 detail::show(w.error_bound_pow);
      }
    }
    clause("error-bound", pass, std::move(detail));
  }

  // norm-bound: ‖y_i‖ <= 1 (normalized) or ‖y_i‖ = 1 (unit)
  if (w.mode != ApproxMode::plain) {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < w.coords.size() && pass; ++i) {
      const double norm = pth_root(to_double(w.norm_pow(i)), p);
      const bool ok = w.mode == ApproxMode::normalized
                          ? norm <= 1.0 + opt.tolerance
                          : std::fabs(norm - 1.0) <= opt.tolerance;
      if (!ok) {
        pass = false;
        detail = "output " + std::to_string(i) + " has norm " +
                 std::to_string(norm);
      }
    }
    clause("norm-bound", pass, std::move(detail));
  }

  return report;
}

// The axiom-instance pipeline: tilde-normalize, build the norm-bounded
// approximation, and certify the ψ (isometry), ψ' (span membership with
// coordinates in [-1,1]) and ψ'' (error and norm bound) clauses.
struct AxiomInstanceResult {
  std::vector<SimpleFunction<double>> normalized_inputs;
  ApproximationWitness<double> witness;
  VerdictReport verdict;
};

inline AxiomInstanceResult verify_axiom_instance(
    const std::vector<SimpleFunction<double>>& xs, int N, const Exponent& p,
    const VerifyOptions& opt = {}) {
  if (N < 1) throw ParameterError("verify_axiom_instance: N must be >= 1");
  AxiomInstanceResult result;
  result.normalized_inputs.reserve(xs.size());
  for (const auto& x : xs)
    result.normalized_inputs.push_back(normalize_tilde(x, p));

  WitnessVariant wv = build_approximation_normalized(
      result.normalized_inputs, N, p, NormGate::at_most_one, opt.tolerance);
  result.witness = std::get<ApproximationWitness<double>>(std::move(wv));

  VerdictReport base =
      verify_certificate(result.witness, result.normalized_inputs, opt);
  auto find = [&base](const char* name) -> const ClauseResult* {
    for (const auto& c : base.clauses)
      if (c.name == name) return &c;
    return nullptr;
  };

  auto& clauses = result.verdict.clauses;
  const ClauseResult* iso = find("isometry");
  const ClauseResult* disj = find("cells-disjoint");
  const ClauseResult* wts = find("weights");
  clauses.push_back({"psi-isometry",
                     iso->pass && disj->pass && wts->pass,
                     iso->pass ? disj->detail + wts->detail : iso->detail});

  // ψ': every y_k is a basis combination with certified small coordinates
  {
    bool pass = true;
    std::string detail;
    double max_abs = 0.0;
    for (const auto& row : result.witness.coords)
      for (double v : row) max_abs = std::max(max_abs, std::fabs(v));
    if (max_abs > 1.0 + opt.tolerance) {
      pass = false;
      detail = "coordinate magnitude " + std::to_string(max_abs) + " > 1";
    }
    clauses.push_back({"psi-prime-coords", pass, std::move(detail)});
  }

  const ClauseResult* err = find("error-bound");
  const ClauseResult* nb = find("norm-bound");
  clauses.push_back({"psi-second-bounds", err->pass && nb->pass,
                     err->pass ? nb->detail : err->detail});
  clauses.push_back(
      {"dimension-bound", find("dimension-bound")->pass, ""});
  return result;
}

}  // namespace lpforge
