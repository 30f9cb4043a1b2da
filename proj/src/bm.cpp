#include "lpforge/bm.hpp"

#include <algorithm>
#include <cmath>

#include "lpforge/errors.hpp"
#include "lpforge/random.hpp"

namespace lpforge {

namespace {

void check_square(const RatMatrix& L) {
  if (L.empty()) throw ParameterError("empty matrix");
  for (const auto& row : L)
    if (row.size() != L.size()) throw ParameterError("matrix is not square");
}

// exactly one nonzero entry in every row and column
bool is_monomial(const RatMatrix& L) {
  const std::size_t m = L.size();
  std::vector<int> col_hits(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    int row_hits = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (sgn(L[r][c]) != 0) {
        ++row_hits;
        ++col_hits[c];
      }
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(),
                     [](int h) { return h == 1; });
}

double max_abs_entry(const RatMatrix& L) {
  Rat best(0);
  for (const auto& row : L)
    for (const Rat& v : row) best = std::max(best, Rat(abs(v)));
  return to_double(best);
}

// ‖L‖_{1->1} = max_j Σ_i |L_ij|, exact on rationals
double column_abs_sum_max(const RatMatrix& L) {
  Rat best(0);
  for (std::size_t c = 0; c < L.size(); ++c) {
    Rat sum(0);
    for (std::size_t r = 0; r < L.size(); ++r) sum += abs(L[r][c]);
    best = std::max(best, sum);
  }
  return to_double(best);
}

double row_abs_sum_max(const RatMatrix& L) {
  Rat best(0);
  for (const auto& row : L) {
    Rat sum(0);
    for (const Rat& v : row) sum += abs(v);
    best = std::max(best, sum);
  }
  return to_double(best);
}

std::vector<std::vector<double>> to_double_matrix(const RatMatrix& L) {
  std::vector<std::vector<double>> M(L.size());
  for (std::size_t r = 0; r < L.size(); ++r)
    for (const Rat& v : L[r]) M[r].push_back(to_double(v));
  return M;
}

double vec_p_norm(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), p);
  return std::pow(s, 1.0 / p);
}

std::vector<double> mat_apply(const std::vector<std::vector<double>>& M,
                          const std::vector<double>& x) {
  std::vector<double> y(M.size(), 0.0);
  for (std::size_t r = 0; r < M.size(); ++r)
    for (std::size_t c = 0; c < M.size(); ++c) y[r] += M[r][c] * x[c];
  return y;
}

std::vector<double> mat_apply_transpose(const std::vector<std::vector<double>>& M,
                                    const std::vector<double>& x) {
  std::vector<double> y(M.size(), 0.0);
  for (std::size_t r = 0; r < M.size(); ++r)
    for (std::size_t c = 0; c < M.size(); ++c) y[c] += M[r][c] * x[r];
  return y;
}

// ψ_p(v)_i = sign(v_i)·|v_i|^{p-1}, the duality map used by the p-norm
// power method
std::vector<double> dual_vector(const std::vector<double>& v, double p) {
  std::vector<double> y(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::fabs(v[i]);
    y[i] = (v[i] >= 0 ? 1.0 : -1.0) * std::pow(a, p - 1.0);
  }
  return y;
}

void normalize_p(std::vector<double>& v, double p) {
  const double n = vec_p_norm(v, p);
  if (n > 0)
    for (double& x : v) x /= n;
}

// Boyd/Higham power method ascent from one start vector; returns the best
// ‖Lx‖_p over visited unit vectors.
double ascend(const std::vector<std::vector<double>>& M, double p,
              std::vector<double> x, int iterations) {
  const double q = p / (p - 1.0);
  normalize_p(x, p);
  double best = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const std::vector<double> y = mat_apply(M, x);
    best = std::max(best, vec_p_norm(y, p));
    std::vector<double> z = mat_apply_transpose(M, dual_vector(y, p));
    double zx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) zx += z[i] * x[i];
    const double zq = vec_p_norm(z, q);
    if (zq <= zx * (1.0 + 1e-13)) break;  // stationary point
    x = dual_vector(z, q);
    normalize_p(x, p);
  }
  return best;
}

}  // namespace

RatMatrix invert_exact(const RatMatrix& L) {
  check_square(L);
  const std::size_t m = L.size();
  RatMatrix a = L;
  RatMatrix inv(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == m) throw ParameterError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat d = a[col][col];
    for (std::size_t c = 0; c < m; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t c = 0; c < m; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

NormEstimate operator_p_norm(const RatMatrix& L, const Exponent& p,
                             const BmOptions& opt) {
  check_square(L);

  if (is_monomial(L)) {
    const double v = max_abs_entry(L);
    return {v, v, true};
  }
  if (p.value() == 1.0) {
    const double v = column_abs_sum_max(L);
    return {v, v, true};
  }

  const double pv = p.value();
  const auto M = to_double_matrix(L);
  const std::size_t m = L.size();

  // Riesz-Thorin interpolation between the column-sum and row-sum norms
  const double c1 = column_abs_sum_max(L);
  const double cinf = row_abs_sum_max(L);
  const double upper =
      std::pow(c1, 1.0 / pv) * std::pow(cinf, 1.0 - 1.0 / pv);

  // sampled maxima: basis vectors, then random-restart projected ascent
  double lower = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> e(m, 0.0);
    e[j] = 1.0;
    lower = std::max(lower, ascend(M, pv, std::move(e), opt.iterations));
  }
  Rng rng(opt.seed);
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x(m);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    lower = std::max(lower, ascend(M, pv, std::move(x), opt.iterations));
  }

  return {lower, std::max(upper, lower), false};
}

BmBound bm_distance_bound(const RatMatrix& L, const Exponent& p,
                          const BmOptions& opt) {
  const RatMatrix inv = invert_exact(L);
  BmBound out;
  out.forward = operator_p_norm(L, p, opt);
  BmOptions inv_opt = opt;
  inv_opt.seed = opt.seed ^ 0x5195f9d1c0ffee11ULL;
  out.inverse = operator_p_norm(inv, p, inv_opt);
  out.bound = std::max(1.0, out.forward.upper * out.inverse.upper);
  out.lower = std::max(1.0, out.forward.lower * out.inverse.lower);
  return out;
}

}  // namespace lpforge
