#pragma once

#include <variant>
#include <vector>

#include "lpforge/partition.hpp"

namespace lpforge {

enum class ApproxMode { plain, normalized, unit };

inline const char* approx_mode_name(ApproxMode m) {
  switch (m) {
    case ApproxMode::plain: return "plain";
    case ApproxMode::normalized: return "normalized";
    case ApproxMode::unit: return "unit";
  }
  return "plain";
}

// Witnesses an ℓ^p-isometric span: disjointly supported basis functions z_l
// with weights w_l = ‖z_l‖^p, so that ‖Σ λ_l z_l‖^p = Σ |λ_l|^p w_l.
template <class S>
struct BasisCertificate {
  SpacePtr space;
  Exponent p = Exponent::integer(1);
  std::vector<Cell> cells;
  std::vector<SimpleFunction<S>> basis;
  std::vector<S> weights;

  std::size_t dimension() const { return cells.size(); }
};

// Coordinates of the approximants y_i in a certified basis, together with
// the claimed error and dimension bounds.
template <class S>
struct ApproximationWitness {
  BasisCertificate<S> certificate;
  std::vector<std::vector<S>> coords;  // [input][cell]; y_i = Σ_l λ_{i,l} z_l
  int n = 0;
  int N = 0;
  ApproxMode mode = ApproxMode::plain;
  S error_bound_pow{};  // claimed bound on ‖x_i - y_i‖^p
  BigInt dim_bound;

  SimpleFunction<S> reconstruct(std::size_t i) const {
    SimpleFunction<S> y = zero_function<S>(certificate.space);
    for (std::size_t l = 0; l < certificate.basis.size(); ++l) {
      const S& lambda = coords[i][l];
      if (lambda == scalar_from_int<S>(0)) continue;
      for (std::size_t a : certificate.cells[l].atoms)
        y.values[a] += lambda * certificate.basis[l].values[a];
    }
    return y;
  }

  // ‖y_i‖^p through the weighted isometry identity.
  S norm_pow(std::size_t i) const {
    S total = scalar_from_int<S>(0);
    for (std::size_t l = 0; l < certificate.weights.size(); ++l)
      total += pow_abs(coords[i][l], certificate.p) * certificate.weights[l];
    return total;
  }
};

// Either arithmetic path; rescaling steps fall back from Rat to double.
using WitnessVariant =
    std::variant<ApproximationWitness<Rat>, ApproximationWitness<double>>;

// (base)^n as a big integer; dimension bounds (2nN+1)^n etc.
inline BigInt power_bound(long base, long n) {
  BigInt b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(n));
  return b;
}

inline BigInt dim_bound_for(ApproxMode mode, int n, int N) {
  switch (mode) {
    case ApproxMode::plain: return power_bound(2L * n * N + 1, n);
    case ApproxMode::normalized: return power_bound(4L * n * N + 1, n);
    case ApproxMode::unit: return power_bound(8L * n * N + 1, n);
  }
  return BigInt(0);
}

// How the input-norm precondition is enforced. The builders are contracted
// for ‖x_i‖ < 1; the axiom pipeline feeds tilde-normalized inputs of norm
// exactly 1 through the same construction, which stays valid for ‖x_i‖ <= 1.
enum class NormGate { strictly_less_one, at_most_one };

namespace detail {

template <class S>
void check_norm_gate(const std::vector<SimpleFunction<S>>& xs,
                     const Exponent& p, NormGate gate, double tol) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const S np = lp_norm_pow(xs[i], p);
    bool ok;
    if constexpr (is_exact_scalar_v<S>)
      ok = gate == NormGate::strictly_less_one ? np < 1 : np <= 1;
    else
      ok = gate == NormGate::strictly_less_one
               ? np < 1.0
               : pth_root(np, p) <= 1.0 + tol;  // tolerance on the norm scale
    if (!ok)
      throw PreconditionError(
          "input " + std::to_string(i) +
          (gate == NormGate::strictly_less_one
               ? " must have norm < 1 (normalize_tilde first?)"
               : " must have norm <= 1"));
  }
}

}  // namespace detail

// Plain construction: grid-truncate each x_i against φ = Σ|x_j| and expand
// the truncations over the cell basis z_l = 1_{B_l}·φ. Exact in rational
// mode. Cells with z_l = 0 (the all-⊗ cell) carry no basis vector and are
// dropped.
template <class S>
ApproximationWitness<S> build_approximation(
    const std::vector<SimpleFunction<S>>& xs, int N, const Exponent& p,
    NormGate gate = NormGate::strictly_less_one, double gate_tol = 1e-9) {
  detail::check_norm_gate(xs, p, gate, gate_tol);
  LabeledPartition<S> part = partition_labels(xs, N);
  const int n = part.n;
  const int grid = n * N;

  BasisCertificate<S> cert{part.space, p, {}, {}, {}};
  for (Cell& cell : part.cells()) {
    // z_l = 1_{B_l}·φ vanishes exactly when φ does, i.e. on the all-⊗ cell
    bool all_zero = true;
    for (const Label& l : cell.key)
      if (l.sign != Label::Sign::zero) all_zero = false;
    if (all_zero) continue;
    SimpleFunction<S> z = zero_function<S>(part.space);
    for (std::size_t a : cell.atoms) z.values[a] = part.phi.values[a];
    cert.weights.push_back(lp_norm_pow(z, p));
    cert.basis.push_back(std::move(z));
    cert.cells.push_back(std::move(cell));
  }

  ApproximationWitness<S> w;
  w.certificate = std::move(cert);
  w.n = n;
  w.N = N;
  w.mode = ApproxMode::plain;
  w.error_bound_pow = pow_abs(scalar_ratio<S>(1, N), p);
  w.dim_bound = dim_bound_for(ApproxMode::plain, n, N);

  // y_i = Σ_k (k/(nN)) (1_{A_{i,k,+}} - 1_{A_{i,k,-}})·φ, i.e. coordinate
  // ±k/(nN) on every cell whose i-th label is (k,±).
  w.coords.assign(xs.size(), {});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto& row = w.coords[i];
    row.reserve(w.certificate.cells.size());
    for (const Cell& cell : w.certificate.cells) {
      const Label& l = cell.key[i];
      switch (l.sign) {
        case Label::Sign::zero: row.push_back(scalar_from_int<S>(0)); break;
        case Label::Sign::plus: row.push_back(scalar_ratio<S>(l.k, grid)); break;
        case Label::Sign::minus: row.push_back(scalar_ratio<S>(-l.k, grid)); break;
      }
    }
  }
  return w;
}

namespace detail {

inline ApproximationWitness<double> to_float_witness(
    const ApproximationWitness<Rat>& w) {
  ApproximationWitness<double> out;
  out.certificate.space = w.certificate.space;
  out.certificate.p = w.certificate.p;
  out.certificate.cells = w.certificate.cells;
  for (const auto& z : w.certificate.basis)
    out.certificate.basis.push_back(to_float(z));
  for (const Rat& wt : w.certificate.weights)
    out.certificate.weights.push_back(to_double(wt));
  out.coords.reserve(w.coords.size());
  for (const auto& row : w.coords) {
    std::vector<double> r;
    r.reserve(row.size());
    for (const Rat& v : row) r.push_back(to_double(v));
    out.coords.push_back(std::move(r));
  }
  out.n = w.n;
  out.N = w.N;
  out.mode = w.mode;
  out.error_bound_pow = to_double(w.error_bound_pow);
  out.dim_bound = w.dim_bound;
  return out;
}

inline ApproximationWitness<double> to_float_witness(
    ApproximationWitness<double> w) {
  return w;
}

// Multiply the i-th coordinate row by alpha.
template <class S>
void rescale_row(ApproximationWitness<S>& w, std::size_t i, const S& alpha) {
  for (S& v : w.coords[i]) v *= alpha;
}

}  // namespace detail

// Norm-bounded construction: run the plain construction at 2N, then pull
// any y'_i with ‖y'_i‖ >= 1 back onto the unit sphere. The rescale factor
// is a p-th root, so a strict rescale forces the floating path unless the
// root happens to be rational; the unrescaled branch stays exact.
template <class S>
WitnessVariant build_approximation_normalized(
    const std::vector<SimpleFunction<S>>& xs, int N, const Exponent& p,
    NormGate gate = NormGate::strictly_less_one, double gate_tol = 1e-9) {
  ApproximationWitness<S> w =
      build_approximation(xs, 2 * N, p, gate, gate_tol);
  w.N = N;
  w.mode = ApproxMode::normalized;
  w.error_bound_pow = pow_abs(scalar_ratio<S>(1, N), p);
  w.dim_bound = dim_bound_for(ApproxMode::normalized, w.n, N);

  if constexpr (is_exact_scalar_v<S>) {
    std::vector<std::pair<std::size_t, Rat>> rescales;
    bool exact_ok = true;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
      const Rat np = w.norm_pow(i);
      if (np <= 1) continue;
      if (auto root = exact_pth_root(np, p)) {
        rescales.emplace_back(i, Rat(1 / *root));
      } else {
        exact_ok = false;
        break;
      }
    }
    if (exact_ok) {
      for (const auto& [i, alpha] : rescales) detail::rescale_row(w, i, alpha);
      return w;
    }
    ApproximationWitness<double> fw = detail::to_float_witness(w);
    for (std::size_t i = 0; i < fw.coords.size(); ++i) {
      const double np = fw.norm_pow(i);
      if (np > 1.0) detail::rescale_row(fw, i, 1.0 / pth_root(np, p));
    }
    return fw;
  } else {
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
      const double np = w.norm_pow(i);
      if (np > 1.0) detail::rescale_row(w, i, 1.0 / pth_root(np, p));
    }
    return w;
  }
}

// Unit-sphere construction: normalized run at 2N, then every y'_i is
// rescaled onto the unit sphere by α_i = 1/‖y'_i‖ (well-defined because
// ‖y'_i‖ >= 1 - 1/(2N) > 0 for unit-norm inputs).
template <class S>
WitnessVariant build_approximation_unit(
    const std::vector<SimpleFunction<S>>& xs, int N, const Exponent& p,
    double unit_tol = 1e-9) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const S np = lp_norm_pow(xs[i], p);
    bool ok;
    if constexpr (is_exact_scalar_v<S>)
      ok = np == 1;
    else
      ok = std::fabs(pth_root(np, p) - 1.0) <= unit_tol;
    if (!ok)
      throw PreconditionError("input " + std::to_string(i) +
                              " must have norm exactly 1");
  }

  WitnessVariant base = build_approximation_normalized(
      xs, 2 * N, p, NormGate::at_most_one, unit_tol);

  auto finish = [&](auto witness) -> WitnessVariant {
    using W = decltype(witness);
    using T = std::remove_cvref_t<decltype(witness.error_bound_pow)>;
    W w = std::move(witness);
    w.N = N;
    w.mode = ApproxMode::unit;
    w.error_bound_pow = pow_abs(scalar_ratio<T>(1, N), w.certificate.p);
    w.dim_bound = dim_bound_for(ApproxMode::unit, w.n, N);
    if constexpr (is_exact_scalar_v<T>) {
      std::vector<std::pair<std::size_t, Rat>> rescales;
      for (std::size_t i = 0; i < w.coords.size(); ++i) {
        const Rat np = w.norm_pow(i);
        if (np == 1) continue;
        auto root = exact_pth_root(np, w.certificate.p);
        if (!root) {
          // irrational rescale factor: finish on the floating path
          ApproximationWitness<double> fw = detail::to_float_witness(w);
          for (std::size_t j = 0; j < fw.coords.size(); ++j) {
            const double fnp = fw.norm_pow(j);
            if (fnp > 0.0)
              detail::rescale_row(fw, j, 1.0 / pth_root(fnp, w.certificate.p));
          }
          return fw;
        }
        rescales.emplace_back(i, Rat(1 / *root));
      }
      for (const auto& [i, alpha] : rescales) detail::rescale_row(w, i, alpha);
      return w;
    } else {
      for (std::size_t i = 0; i < w.coords.size(); ++i) {
        const double np = w.norm_pow(i);
        if (np > 0.0) detail::rescale_row(w, i, 1.0 / pth_root(np, w.certificate.p));
      }
      return w;
    }
  };

  return std::visit(finish, std::move(base));
}

}  // namespace lpforge
