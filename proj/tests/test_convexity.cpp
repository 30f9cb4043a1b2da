#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <lpforge/convexity.hpp>
#include <lpforge/random.hpp>

using namespace lpforge;

namespace {

const Exponent kP2 = Exponent::integer(2);

// step-by-step reference evaluation, kept independent of the library's
// closed forms
double sigma_reference(double a, double d, double p) {
  const double inner = std::pow(1.0 - std::pow(a, p), 1.0 / p) + d;
  if (inner >= 1.0) return a;
  return a - std::pow(1.0 - std::pow(inner, p), 1.0 / p);
}

}  // namespace

TEST_CASE("eta closed-form values") {
  CHECK(eta(2.0, kP2) == doctest::Approx(1.0));
  CHECK(eta(2.0, Exponent::real(3.5)) == doctest::Approx(1.0));
  // p=2, eps=1 -> 1 - sqrt(3)/2
  CHECK(eta(1.0, kP2) == doctest::Approx(0.13397459621556135).epsilon(1e-12));
  // p=2, eps=sqrt(2) -> 1 - sqrt(1/2)
  CHECK(eta(std::sqrt(2.0), kP2) ==
        doctest::Approx(0.29289321881345254).epsilon(1e-12));
  CHECK_THROWS_AS(eta(0.0, kP2), ParameterError);
  CHECK_THROWS_AS(eta(2.5, kP2), ParameterError);
  CHECK_THROWS_AS(eta(1.0, Exponent::integer(1)), ParameterError);
}

TEST_CASE("eta is strictly increasing and continuous on a grid") {
  for (double p : {2.0, 2.5, 3.0, 4.0}) {
    const Exponent pe = p == std::floor(p)
                            ? Exponent::integer(static_cast<long>(p))
                            : Exponent::real(p);
    double prev = 0.0;
    const double h = 2.0 / 1000.0;
    // increments are largest at the right endpoint, where they obey
    // eta(2) - eta(2-h) = (1-(1-h/2)^p)^{1/p} <= (p·h)^{1/p}
    const double step_bound = std::pow(p * h, 1.0 / p);
    for (int i = 1; i <= 1000; ++i) {
      const double v = eta(h * i, pe);
      CHECK(v > prev);
      CHECK(v - prev <= step_bound);
      prev = v;
    }
    CHECK(prev == doctest::Approx(1.0));
  }
}

TEST_CASE("sigma values and positivity") {
  // p=2, a=1/2, d=1/10: frozen from the step-by-step evaluation
  CHECK(sigma(0.5, 0.1, kP2) == doctest::Approx(0.24155286953979878).epsilon(1e-12));
  CHECK(sigma(0.5, 0.1, kP2) ==
        doctest::Approx(sigma_reference(0.5, 0.1, 2.0)));
  // clamped case: sqrt(1-0.81)+0.9 > 1
  CHECK(sigma(0.9, 0.9, kP2) == doctest::Approx(0.9));
  CHECK_THROWS_AS(sigma(0.0, 0.5, kP2), ParameterError);
  CHECK_THROWS_AS(sigma(0.5, 1.0, kP2), ParameterError);

  for (double p : {2.0, 3.0, 4.0}) {
    const Exponent pe = Exponent::integer(static_cast<long>(p));
    for (int ia = 1; ia <= 19; ++ia) {
      for (int id = 1; id <= 19; ++id) {
        const double a = ia * 0.05, d = id * 0.05;
        CHECK(sigma(a, d, pe) > 0.0);
        CHECK(sigma(a, d, pe) <= a);
      }
    }
  }
}

TEST_CASE("power inequality") {
  CHECK(check_power_inequality(3.0, 0.0, kP2));          // x2 = 0, equality
  CHECK(check_power_inequality(1.0, 1.0, kP2));          // 2 <= 2
  CHECK(check_power_inequality(1.0, 1.0, Exponent::integer(4)));  // 2 <= 4
  CHECK_THROWS_AS(check_power_inequality(-1.0, 0.0, kP2), ParameterError);

  Rng rng(12);
  for (int t = 0; t < 20000; ++t) {
    const double x1 = rng.uniform(0.0, 10.0);
    const double x2 = rng.uniform(0.0, 10.0);
    const Exponent p = Exponent::real(rng.uniform(2.0, 5.0));
    CHECK(check_power_inequality(x1, x2, p));
  }
}

TEST_CASE("clarkson inequality") {
  CHECK(check_clarkson(1.0, 1.0, kP2));    // equality: 1 + 0 <= 1
  CHECK(check_clarkson(1.0, -1.0, kP2));   // symmetric case
  CHECK(check_clarkson(1.0, 0.0, kP2));    // 1/4 + 1/4 <= 1/2, equality

  Rng rng(34);
  const double ps[] = {2.0, 2.5, 3.0, 4.0};
  for (int t = 0; t < 50000; ++t) {
    const double a = rng.uniform(-10.0, 10.0);
    const double b = rng.uniform(-10.0, 10.0);
    const double pv = ps[static_cast<std::size_t>(rng.uniform_int(0, 3))];
    CHECK(check_clarkson(a, b, Exponent::real(pv)));
  }
}

TEST_CASE("sigma transfer bound") {
  // near-zero delta reduces to lhs <= lhs + d
  CHECK(check_sigma_bound(0.5, 0.1, 1e-12, kP2));
  // p=2, a=1/2, d=1/10, delta=0.12 < sigma: both sides evaluated
  CHECK(check_sigma_bound(0.5, 0.1, 0.12, kP2));
  CHECK_THROWS_AS(check_sigma_bound(0.5, 0.1, 0.5, kP2), PreconditionError);

  for (double p : {2.0, 3.0, 4.0}) {
    const Exponent pe = Exponent::integer(static_cast<long>(p));
    for (int ia = 1; ia <= 19; ++ia) {
      for (int id = 1; id <= 19; ++id) {
        const double a = ia * 0.05, d = id * 0.05;
        CHECK(check_sigma_bound(a, d, sigma(a, d, pe) / 2.0, pe));
      }
    }
  }
}

TEST_CASE("delta_for") {
  // p=2, eps=1, c=1/2: sigma clamps to 1/2, so delta = 1/4
  CHECK(delta_for(1.0, 0.5, kP2) == doctest::Approx(0.25));
  // p=2, eps=1, c=1/10: sigma(1/2,1/20)/2 ≈ 0.049440 < 1/20, so the sigma
  // branch wins (frozen from the step-by-step evaluation)
  CHECK(delta_for(1.0, 0.1, kP2) ==
        doctest::Approx(0.04943987209470315).epsilon(1e-12));
  CHECK(delta_for(1.0, 0.1, kP2) ==
        doctest::Approx(std::min(0.05, sigma_reference(0.5, 0.05, 2.0) / 2.0)));

  Rng rng(56);
  for (int t = 0; t < 2000; ++t) {
    const double eps = rng.uniform(1e-3, 2.0);
    const double c = rng.uniform(1e-3, 0.999);
    const double d = delta_for(eps, c, kP2);
    CHECK(d > 0.0);
    CHECK(d < eps / 2.0);
  }
  CHECK_THROWS_AS(delta_for(0.0, 0.5, kP2), ParameterError);
  CHECK_THROWS_AS(delta_for(1.0, 1.0, kP2), ParameterError);
}

TEST_CASE("certify_uniform_convexity on the orthogonal extremal pair") {
  auto sp = unit_weight_space(2);
  SimpleFunction<double> x1{sp, {1.0, 0.0}};
  SimpleFunction<double> x2{sp, {0.0, 1.0}};
  auto cert = certify_uniform_convexity(x1, x2, std::sqrt(2.0), 0.01, kP2);
  CHECK(cert.pass);
  // final clause: ‖(x1+x2)/2‖ = 1/sqrt(2) <= sqrt(1/2) + 0.01
  const auto& final_step = cert.chain.back();
  CHECK(final_step.name == "final");
  CHECK(final_step.lhs == doctest::Approx(std::sqrt(0.5)));
  CHECK(final_step.rhs == doctest::Approx(std::sqrt(0.5) + 0.01));
}

TEST_CASE("certify_uniform_convexity rejects coincident inputs") {
  auto sp = unit_weight_space(2);
  SimpleFunction<double> x{sp, {1.0, 0.0}};
  CHECK_THROWS_AS(certify_uniform_convexity(x, x, 0.5, 0.1, kP2),
                  PreconditionError);
}

TEST_CASE("certify_uniform_convexity sweep over c") {
  auto sp = unit_weight_space(3);
  SimpleFunction<double> x1{sp, {0.8, 0.3, -0.2}};
  SimpleFunction<double> x2{sp, {-0.1, 0.6, 0.5}};
  const double eps = lp_norm(sub(x1, x2), kP2) * 0.99;
  const double n1 = lp_norm(x1, kP2), n2 = lp_norm(x2, kP2);
  auto y1 = scale(1.0 / std::max(1.0, n1), x1);
  auto y2 = scale(1.0 / std::max(1.0, n2), x2);
  const double eps2 = std::min(eps, lp_norm(sub(y1, y2), kP2) * 0.999);
  for (int k = 1; k <= 10; ++k) {
    const double c = std::pow(2.0, -k);
    auto cert = certify_uniform_convexity(y1, y2, eps2, c, kP2);
    CAPTURE(k);
    CHECK(cert.pass);
  }
}

TEST_CASE("random convexity certificates pass end to end") {
  Rng rng(90210);
  const long pvals[] = {2, 3, 4};
  int done = 0;
  while (done < 25) {
    const auto atoms = static_cast<std::size_t>(rng.uniform_int(2, 12));
    auto sp = unit_weight_space(atoms);
    const Exponent p =
        Exponent::integer(pvals[static_cast<std::size_t>(rng.uniform_int(0, 2))]);
    std::vector<double> v1, v2;
    for (std::size_t a = 0; a < atoms; ++a) {
      v1.push_back(rng.uniform(-1.0, 1.0));
      v2.push_back(rng.uniform(-1.0, 1.0));
    }
    SimpleFunction<double> x1{sp, std::move(v1)}, x2{sp, std::move(v2)};
    const double s1 = lp_norm(x1, p), s2 = lp_norm(x2, p);
    if (s1 == 0.0 || s2 == 0.0) continue;
    x1 = scale(rng.uniform(0.3, 1.0) / s1, x1);
    x2 = scale(rng.uniform(0.3, 1.0) / s2, x2);
    const double dist = lp_norm(sub(x1, x2), p);
    if (dist < 0.05) continue;
    const double eps = dist * rng.uniform(0.5, 0.999);
    const double c = rng.uniform(0.001, 0.999);
    ConvexityOptions opt;
    opt.seed = rng.next();
    auto cert = certify_uniform_convexity(x1, x2, eps, c, p, opt);
    CAPTURE(done);
    CHECK(cert.pass);
    ++done;
  }
}

TEST_CASE("brute-force oracle agrees with eta") {
  OracleOptions opt;
  opt.samples = 20000;
  opt.seed = 11;

  // p=2, m=2, eps=1: oracle matches the closed form
  auto r = brute_force_modulus(kP2, 2, 1.0, opt);
  CHECK(r.extremal_value == doctest::Approx(0.13397459621556135).epsilon(1e-9));
  CHECK(r.minimum >= eta(1.0, kP2) - 1e-6);
  CHECK(r.extremal_value <= eta(1.0, kP2) + 1e-3);

  // eps -> 2: the modulus tends to 1 (antipodal unit vectors)
  auto r2 = brute_force_modulus(kP2, 2, 1.999999, opt);
  CHECK(r2.extremal_value == doctest::Approx(1.0).epsilon(1e-3));

  // p=4 family achieves eta within the stated tolerances
  const Exponent p4 = Exponent::integer(4);
  auto r4 = brute_force_modulus(p4, 2, 1.0, opt);
  CHECK(r4.minimum >= eta(1.0, p4) - 1e-6);
  CHECK(r4.extremal_value <= eta(1.0, p4) + 1e-3);

  CHECK_THROWS_AS(brute_force_modulus(kP2, 5, 1.0, opt), ParameterError);
}
