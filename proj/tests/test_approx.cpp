#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lpforge/bm.hpp>
#include <lpforge/certificate.hpp>
#include <lpforge/verify.hpp>

using namespace lpforge;

namespace {

const Exponent kP2 = Exponent::integer(2);

SimpleFunction<Rat> rat_fn(SpacePtr sp, std::vector<Rat> v) {
  return make_function<Rat>(std::move(sp), std::move(v));
}

// Random instance family used throughout: |Ω| <= 12, n <= 3, N <= 6,
// integer p ∈ {1,2,3}, rational inputs with ‖x_i‖ < 1.
struct RandomInstance {
  SpacePtr space;
  std::vector<SimpleFunction<Rat>> xs;
  int N = 1;
  Exponent p = Exponent::integer(1);
};

RandomInstance random_instance(Rng& rng) {
  const auto atom_count = static_cast<std::size_t>(rng.uniform_int(1, 12));
  std::vector<std::string> atoms;
  std::vector<Rat> weights;
  for (std::size_t a = 0; a < atom_count; ++a) {
    atoms.push_back("a" + std::to_string(a));
    weights.push_back(make_rat(rng.uniform_int(1, 8), rng.uniform_int(1, 8)));
  }
  RandomInstance inst;
  inst.space = make_space(std::move(atoms), std::move(weights));
  inst.N = static_cast<int>(rng.uniform_int(1, 6));
  inst.p = Exponent::integer(rng.uniform_int(1, 3));
  const int n = static_cast<int>(rng.uniform_int(1, 3));
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> vals;
    for (std::size_t a = 0; a < atom_count; ++a)
      vals.push_back(rng.uniform_rat(6, 8));
    auto f = rat_fn(inst.space, std::move(vals));
    // shrink below the unit sphere: x ← x/(2⌈‖x‖^p⌉+1) keeps values rational
    const Rat np = lp_norm_pow(f, inst.p);
    BigInt ceil_np = np.get_num() / np.get_den() + 1;
    inst.xs.push_back(scale(Rat(1 / (2 * Rat(ceil_np))), f));
  }
  return inst;
}

}  // namespace

TEST_CASE("partition labels on the worked two-atom example") {
  // unit weights, p=2, n=1, N=2, x1=(3/5, 0)
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(3, 5), make_rat(0)});
  auto part = partition_labels<Rat>({x}, 2);

  CHECK(part.n == 1);
  CHECK(part.phi.values == std::vector<Rat>{make_rat(3, 5), make_rat(0)});
  // atom a: 3/10 < 3/5 <= 3/5 puts it in class (1,+); atom b is ⊗
  CHECK(part.labels[0][0].k == 1);
  CHECK(part.labels[0][0].sign == Label::Sign::plus);
  CHECK(part.labels[1][0].sign == Label::Sign::zero);
}

TEST_CASE("partition labels: zero input is all ⊗") {
  auto sp = unit_weight_space(3);
  auto part = partition_labels<Rat>({zero_function<Rat>(sp)}, 2);
  for (const auto& per_atom : part.labels)
    CHECK(per_atom[0].sign == Label::Sign::zero);
  // the all-⊗ cell is the only cell
  CHECK(part.cells().size() == 1);
}

TEST_CASE("partition labels: phi = 0 at an atom forces ⊗ there") {
  auto sp = unit_weight_space(2);
  auto x1 = rat_fn(sp, {make_rat(1, 3), make_rat(0)});
  auto x2 = rat_fn(sp, {make_rat(-1, 4), make_rat(0)});
  auto part = partition_labels<Rat>({x1, x2}, 1);
  CHECK(part.labels[1][0].sign == Label::Sign::zero);
  CHECK(part.labels[1][1].sign == Label::Sign::zero);
  CHECK(part.labels[0][1].sign == Label::Sign::minus);
}

TEST_CASE("partition parameter errors") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(1, 2), make_rat(0)});
  CHECK_THROWS_AS(partition_labels<Rat>({}, 2), ParameterError);
  CHECK_THROWS_AS(partition_labels<Rat>({x}, 0), ParameterError);
}

TEST_CASE("build_approximation on the worked example") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(3, 5), make_rat(0)});
  auto w = build_approximation<Rat>({x}, 2, kP2);

  // one cell {a}, z=(3/5,0), w=9/25, y=(3/10,0), coordinate 1/2, dim 1 <= 5
  REQUIRE(w.certificate.cells.size() == 1);
  CHECK(w.certificate.cells[0].atoms == std::vector<std::size_t>{0});
  CHECK(w.certificate.basis[0].values ==
        std::vector<Rat>{make_rat(3, 5), make_rat(0)});
  CHECK(w.certificate.weights[0] == make_rat(9, 25));
  CHECK(w.coords[0] == std::vector<Rat>{make_rat(1, 2)});
  CHECK(w.reconstruct(0).values ==
        std::vector<Rat>{make_rat(3, 10), make_rat(0)});
  CHECK(w.dim_bound == 5);
  // the isometry identity at the witness coordinate: (1/2·3/5)^2 = (1/4)(9/25)
  CHECK(lp_norm_pow(w.reconstruct(0), kP2) == make_rat(1, 4) * make_rat(9, 25));
  // ‖x-y‖ = 3/10 <= 1/2
  CHECK(lp_norm_pow(sub(x, w.reconstruct(0)), kP2) == make_rat(9, 100));
  CHECK(verify_certificate<Rat>(w, {x}).pass());
}

TEST_CASE("build_approximation of the zero function") {
  auto sp = unit_weight_space(3);
  auto w = build_approximation<Rat>({zero_function<Rat>(sp)}, 3, kP2);
  CHECK(w.certificate.cells.empty());
  CHECK(w.reconstruct(0).values == zero_function<Rat>(sp).values);
  CHECK(verify_certificate<Rat>(w, {zero_function<Rat>(sp)}).pass());
}

TEST_CASE("build_approximation rejects norms >= 1") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(1), make_rat(0)});
  CHECK_THROWS_AS(build_approximation<Rat>({x}, 2, kP2), PreconditionError);
}

TEST_CASE("random instances pass exact verification") {
  Rng rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    RandomInstance inst = random_instance(rng);
    auto w = build_approximation(inst.xs, inst.N, inst.p);

    VerifyOptions opt;
    opt.seed = rng.next();
    opt.trials = 25;
    auto verdict = verify_certificate(w, inst.xs, opt);
    CAPTURE(trial);
    if (!verdict.pass()) {
      const auto* f = verdict.first_failure();
      FAIL_CHECK("clause ", f->name, ": ", f->detail);
    }

    // atomwise |x_i - y_i| <= φ/(nN), exactly
    auto part = partition_labels(inst.xs, inst.N);
    const int grid = part.n * inst.N;
    for (std::size_t i = 0; i < inst.xs.size(); ++i) {
      auto diff = pointwise_abs(sub(inst.xs[i], w.reconstruct(i)));
      for (std::size_t a = 0; a < diff.values.size(); ++a)
        CHECK(diff.values[a] * grid <= part.phi.values[a]);
    }

    // cell count <= min((2nN+1)^n, |Ω|)
    CHECK(w.certificate.cells.size() <= inst.space->size());
    CHECK(BigInt(static_cast<long>(w.certificate.cells.size())) <= w.dim_bound);

    // ‖x_i - y_i‖^p <= N^{-p} exactly
    for (std::size_t i = 0; i < inst.xs.size(); ++i)
      CHECK(lp_norm_pow(sub(inst.xs[i], w.reconstruct(i)), inst.p) <=
            pow_abs(make_rat(1, inst.N), inst.p));
  }
}

TEST_CASE("doubling N never increases the achieved error") {
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    RandomInstance inst = random_instance(rng);
    auto w1 = build_approximation(inst.xs, inst.N, inst.p);
    auto w2 = build_approximation(inst.xs, 2 * inst.N, inst.p);
    for (std::size_t i = 0; i < inst.xs.size(); ++i) {
      const Rat e1 = lp_norm_pow(sub(inst.xs[i], w1.reconstruct(i)), inst.p);
      const Rat e2 = lp_norm_pow(sub(inst.xs[i], w2.reconstruct(i)), inst.p);
      CHECK(e2 <= e1);
    }
  }
}

TEST_CASE("exhaustive isometry verification") {
  Rng rng(2718);
  for (int trial = 0; trial < 15; ++trial) {
    RandomInstance inst = random_instance(rng);
    auto w = build_approximation(inst.xs, inst.N, inst.p);
    VerifyOptions opt;
    opt.exhaustive = true;
    CHECK(verify_certificate(w, inst.xs, opt).pass());
  }
  // the pair family sees a cross-cell support leak that singletons miss
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(1, 2), make_rat(-1, 3)});
  auto w = build_approximation<Rat>({x}, 2, kP2);
  REQUIRE(w.certificate.cells.size() == 2);
  w.certificate.cells[0].atoms = {0, 1};
  w.certificate.basis[0].values[1] = make_rat(1, 9);
  VerifyOptions opt;
  opt.exhaustive = true;
  opt.check_inputs = false;
  auto verdict = verify_certificate<Rat>(w, {}, opt);
  CHECK_FALSE(verdict.pass());
}

TEST_CASE("verify_certificate flags an injected corrupt weight") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(3, 5), make_rat(0)});
  auto w = build_approximation<Rat>({x}, 2, kP2);
  w.certificate.weights[0] += make_rat(1, 7);
  auto verdict = verify_certificate<Rat>(w, {x});
  CHECK_FALSE(verdict.pass());
  CHECK(verdict.first_failure()->name == "weights");
}

TEST_CASE("verify_certificate flags overlapping cells") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(1, 2), make_rat(-1, 3)});
  auto w = build_approximation<Rat>({x}, 2, kP2);
  REQUIRE(w.certificate.cells.size() == 2);
  w.certificate.cells[1].atoms = w.certificate.cells[0].atoms;
  auto verdict = verify_certificate<Rat>(w, {x});
  CHECK_FALSE(verdict.pass());
  CHECK(verdict.first_failure()->name == "cells-disjoint");
}

TEST_CASE("normalized mode without rescaling equals the plain run at 2N") {
  auto sp = unit_weight_space(2);
  auto x = rat_fn(sp, {make_rat(3, 5), make_rat(1, 5)});
  auto wv = build_approximation_normalized<Rat>({x}, 2, kP2);
  REQUIRE(std::holds_alternative<ApproximationWitness<Rat>>(wv));
  const auto& w = std::get<ApproximationWitness<Rat>>(wv);
  auto plain = build_approximation<Rat>({x}, 4, kP2);
  CHECK(w.coords == plain.coords);
  CHECK(w.certificate.weights == plain.certificate.weights);
  CHECK(w.mode == ApproxMode::normalized);
  CHECK(w.dim_bound == dim_bound_for(ApproxMode::normalized, 1, 2));
  CHECK(verify_certificate<Rat>(w, {x}).pass());
}

TEST_CASE("normalized mode rescales outputs that exceed the unit sphere") {
  // p=1, two unit-weight atoms, two near-identical inputs whose magnitudes
  // sit just above the grid points: the truncation lands above norm 1 and
  // the rescale pulls it back
  const Exponent p1 = Exponent::integer(1);
  auto sp = unit_weight_space(2);
  const double u = 5e-10, e = 2e-10;
  const double hi = (0.5 + e) * (1.0 + u), lo = (0.5 - e) * (1.0 + u);
  std::vector<SimpleFunction<double>> xs = {{sp, {hi, hi}}, {sp, {lo, lo}}};
  REQUIRE(lp_norm(xs[0], p1) > 1.0);
  REQUIRE(lp_norm(xs[0], p1) <= 1.0 + 1e-9);

  auto wv = build_approximation_normalized(xs, 1, p1, NormGate::at_most_one);
  const auto& w = std::get<ApproximationWitness<double>>(wv);
  // the unrescaled truncation of x_0 has norm 1+u; after rescaling it is 1
  CHECK(lp_norm(w.reconstruct(0), p1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_norm(w.reconstruct(0), p1) <= 1.0 + 1e-12);
  CHECK(lp_norm(sub(xs[0], w.reconstruct(0)), p1) <= 1.0 + 1e-9);
  // the second input's truncation stays well inside the ball, untouched
  CHECK(lp_norm(w.reconstruct(1), p1) < 0.9);
  CHECK(verify_certificate(w, xs).pass());
}

TEST_CASE("normalized mode bounds outputs on random float instances") {
  Rng rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    RandomInstance inst = random_instance(rng);
    std::vector<SimpleFunction<double>> xs = to_float(inst.xs);
    auto wv = build_approximation_normalized(xs, inst.N, inst.p);
    const auto& w = std::get<ApproximationWitness<double>>(wv);
    auto verdict = verify_certificate(w, xs);
    CAPTURE(trial);
    CHECK(verdict.pass());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(lp_norm(w.reconstruct(i), inst.p) <= 1.0 + 1e-9);
      CHECK(lp_norm(sub(xs[i], w.reconstruct(i)), inst.p) <=
            1.0 / inst.N + 1e-9);
    }
  }
}

TEST_CASE("unit mode reproduces basis-aligned step functions exactly") {
  // x of the form 1_B·φ-multiple with ‖x‖ = 1: the grid reproduces it and
  // the rescale factor is rational, so y = x with error exactly 0
  auto sp = unit_weight_space(4);
  auto x = rat_fn(sp, {make_rat(1, 2), make_rat(1, 2), make_rat(1, 2),
                       make_rat(1, 2)});
  REQUIRE(lp_norm_pow(x, kP2) == 1);
  auto wv = build_approximation_unit<Rat>({x}, 1, kP2);
  REQUIRE(std::holds_alternative<ApproximationWitness<Rat>>(wv));
  const auto& w = std::get<ApproximationWitness<Rat>>(wv);
  CHECK(w.reconstruct(0).values == x.values);
  CHECK(lp_norm_pow(sub(x, w.reconstruct(0)), kP2) == 0);
  CHECK(w.mode == ApproxMode::unit);
  CHECK(verify_certificate<Rat>(w, {x}).pass());
}

TEST_CASE("unit mode falls back to floats when the rescale is irrational") {
  // two rational points of the unit circle whose truncations have
  // non-square norm powers: the rescale is a genuine square root and the
  // witness switches to the floating path
  auto sp = unit_weight_space(2);
  auto x1 = rat_fn(sp, {make_rat(3, 5), make_rat(4, 5)});
  auto x2 = rat_fn(sp, {make_rat(5, 13), make_rat(12, 13)});
  REQUIRE(lp_norm_pow(x1, kP2) == 1);
  REQUIRE(lp_norm_pow(x2, kP2) == 1);
  auto wv = build_approximation_unit<Rat>({x1, x2}, 1, kP2);
  REQUIRE(std::holds_alternative<ApproximationWitness<double>>(wv));
  const auto& w = std::get<ApproximationWitness<double>>(wv);
  const auto fx = to_float(std::vector<SimpleFunction<Rat>>{x1, x2});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::fabs(lp_norm(w.reconstruct(i), kP2) - 1.0) <= 1e-12);
    CHECK(lp_norm(sub(fx[i], w.reconstruct(i)), kP2) <= 1.0 + 1e-9);
  }
  CHECK(verify_certificate(w, fx).pass());
}

TEST_CASE("unit mode on generic float instances") {
  Rng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const auto atom_count = static_cast<std::size_t>(rng.uniform_int(2, 10));
    auto sp = unit_weight_space(atom_count);
    const Exponent p = Exponent::integer(rng.uniform_int(2, 3));
    const int N = static_cast<int>(rng.uniform_int(1, 4));
    std::vector<SimpleFunction<double>> xs;
    const int n = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < n; ++i) {
      std::vector<double> vals;
      for (std::size_t a = 0; a < atom_count; ++a)
        vals.push_back(rng.uniform(-1.0, 1.0));
      SimpleFunction<double> f{sp, std::move(vals)};
      const double norm = lp_norm(f, p);
      if (norm == 0.0) {
        f.values[0] = 1.0;
        xs.push_back(f);
      } else {
        xs.push_back(scale(1.0 / norm, f));
      }
    }
    auto wv = build_approximation_unit(xs, N, p);
    const auto& w = std::get<ApproximationWitness<double>>(wv);
    CAPTURE(trial);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::fabs(lp_norm(w.reconstruct(i), p) - 1.0) <= 1e-9);
      CHECK(lp_norm(sub(xs[i], w.reconstruct(i)), p) <= 1.0 / N + 1e-9);
    }
    CHECK(verify_certificate(w, xs).pass());
  }
}

TEST_CASE("unit mode rejects inputs off the unit sphere") {
  auto sp = unit_weight_space(2);
  std::vector<SimpleFunction<double>> xs = {{sp, {0.5, 0.0}}};
  CHECK_THROWS_AS(build_approximation_unit(xs, 2, kP2), PreconditionError);
}

TEST_CASE("axiom instance pipeline") {
  auto sp = unit_weight_space(2);

  SUBCASE("norm-2 input is tilde-normalized onto the sphere") {
    std::vector<SimpleFunction<double>> xs = {{sp, {2.0, 0.0}}};
    auto res = verify_axiom_instance(xs, 1, kP2);
    CHECK(res.normalized_inputs[0].values[0] == doctest::Approx(1.0));
    CHECK(res.verdict.pass());
    CHECK(lp_norm(sub(res.normalized_inputs[0], res.witness.reconstruct(0)),
                  kP2) <= 1.0 + 1e-9);
  }

  SUBCASE("all-zero inputs are trivially satisfied with an empty basis") {
    std::vector<SimpleFunction<double>> xs = {zero_function<double>(sp)};
    auto res = verify_axiom_instance(xs, 3, kP2);
    CHECK(res.verdict.pass());
    CHECK(res.witness.certificate.cells.empty());
  }

  SUBCASE("coordinates stay within [-1,1]") {
    Rng rng(909);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<SimpleFunction<double>> xs;
      const int n = static_cast<int>(rng.uniform_int(1, 3));
      for (int i = 0; i < n; ++i) {
        std::vector<double> vals = {rng.uniform(-2.0, 2.0),
                                    rng.uniform(-2.0, 2.0)};
        xs.push_back({sp, std::move(vals)});
      }
      auto res = verify_axiom_instance(xs, 2, kP2);
      CHECK(res.verdict.pass());
      for (const auto& row : res.witness.coords)
        for (double v : row) CHECK(std::fabs(v) <= 1.0 + 1e-9);
    }
  }

  SUBCASE("composition with verify_certificate is idempotent in verdict") {
    std::vector<SimpleFunction<double>> xs = {{sp, {0.7, -0.4}}};
    auto res = verify_axiom_instance(xs, 2, kP2);
    auto again = verify_certificate(res.witness, res.normalized_inputs);
    CHECK(res.verdict.pass() == again.pass());
  }
}

TEST_CASE("bm_distance_bound on exact cases") {
  const auto I = RatMatrix{{make_rat(1), make_rat(0)},
                           {make_rat(0), make_rat(1)}};
  auto r = bm_distance_bound(I, kP2);
  CHECK(r.bound == doctest::Approx(1.0));
  CHECK(r.forward.exact);

  // diag(2, 1/2), p=2 -> 2 * 2 = 4
  const auto D = RatMatrix{{make_rat(2), make_rat(0)},
                           {make_rat(0), make_rat(1, 2)}};
  auto rd = bm_distance_bound(D, kP2);
  CHECK(rd.bound == doctest::Approx(4.0));
  CHECK(rd.forward.exact);
  CHECK(rd.inverse.exact);

  // permutation matrices are isometries for every p
  const auto P = RatMatrix{{make_rat(0), make_rat(1), make_rat(0)},
                           {make_rat(0), make_rat(0), make_rat(1)},
                           {make_rat(1), make_rat(0), make_rat(0)}};
  for (const auto& p : {Exponent::integer(1), Exponent::integer(2),
                        Exponent::real(2.5), Exponent::integer(3)}) {
    auto rp = bm_distance_bound(P, p);
    CHECK(rp.bound == doctest::Approx(1.0));
  }
}

TEST_CASE("bm_distance_bound rejects singular matrices") {
  const auto S = RatMatrix{{make_rat(1), make_rat(2)},
                           {make_rat(2), make_rat(4)}};
  CHECK_THROWS_AS(bm_distance_bound(S, kP2), ParameterError);
}

TEST_CASE("bm_distance_bound is at least 1 and brackets the truth") {
  Rng rng(1618);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform_int(2, 4));
    RatMatrix L(m, std::vector<Rat>(m));
    for (auto& row : L)
      for (Rat& v : row) v = rng.uniform_rat(4, 3);
    RatMatrix reg = L;
    for (std::size_t i = 0; i < m; ++i) reg[i][i] += 3;  // keep invertible
    const Exponent p =
        rng.uniform_int(0, 1) ? Exponent::integer(2) : Exponent::real(2.5);
    BmOptions opt;
    opt.seed = rng.next();
    auto r = bm_distance_bound(reg, p, opt);
    CHECK(r.bound >= 1.0);
    CHECK(r.lower <= r.bound * (1.0 + 1e-9));
    CHECK(r.forward.lower <= r.forward.upper * (1.0 + 1e-9));
  }
}

TEST_CASE("bm bound of a certificate's rescaled basis map is 1") {
  auto sp = unit_weight_space(3);
  auto x = rat_fn(sp, {make_rat(1, 2), make_rat(1, 3), make_rat(-1, 4)});
  auto w = build_approximation<Rat>({x}, 2, kP2);
  const std::size_t dim = w.certificate.cells.size();
  REQUIRE(dim >= 1);
  // in cell coordinates the rescaled basis map e_l ↦ z_l/‖z_l‖ is diagonal
  // with entries ‖z_l‖·(1/‖z_l‖) = 1
  RatMatrix map(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t l = 0; l < dim; ++l) {
    const double norm = pth_root(to_double(w.certificate.weights[l]), kP2);
    map[l][l] = Rat(norm * (1.0 / norm));
  }
  auto r = bm_distance_bound(map, kP2);
  CHECK(std::fabs(r.bound - 1.0) <= 1e-9);
}
