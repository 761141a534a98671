#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kzw/kzw.hpp"
#include "kzw/special.hpp"

using namespace kzw;
namespace sp = kzw::special;
using namespace std::complex_literals;

namespace {

// K_{0.25,0.5}(1). Computed by eval_integral and eval_double_sum, then
// confirmed to 30 digits with independent arbitrary-precision code.
const Complex kV1 = 0.356652618306414725663865945967;

// Further 30-digit references from the same arbitrary-precision code.
const Complex kOutsideStrip(1.3939371692003606648137385886, -0.530299027898668965722924909959);  // (1.7-0.3i, 0.4, 0.8)
const Complex kImaginaryZ(0.819786811239901691916459284746, -0.0410064249720530843346815585497);  // (0.4i, 0.3+0.2i, 0.5)

void check_close(Complex got, Complex want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(rel_diff(got, want) <= tol);
}

using Evaluator = Evaluation (*)(const KzwPoint&, const EvalConfig&);

Evaluation basset(const KzwPoint& p, const EvalConfig& cfg) { return eval_basset_z0(p.w, p.x, cfg); }

// Values at large x sit far below the default abs_tol; ask for relative accuracy only.
EvalConfig relative_only() {
  EvalConfig cfg;
  cfg.abs_tol = 1e-300;
  return cfg;
}

}  // namespace

TEST_CASE("sector constraint") {
  CHECK_THROWS_AS(KzwPoint(0.2, 0.1, 0.0), DomainError);
  CHECK_THROWS_AS(KzwPoint(0.2, 0.1, -1.0), DomainError);
  CHECK_THROWS_AS(KzwPoint(0.2, 0.1, Complex(1.0, 1.0)), DomainError);
  CHECK_NOTHROW(KzwPoint(0.2, 0.1, Complex(1.0, 0.99)));
}

TEST_CASE("integral") {
  check_close(eval_integral({0.5, 0.0, 2.0}).value, std::sqrt(kPi / 4.0) * std::exp(-2.0), 1e-13);
  const Complex z(0.3, 0.1);
  check_close(eval_integral({z, 0.0, 2.4}).value, sp::bessel_K(z, 2.4), 1e-10);
  const Evaluation v = eval_integral({0.25, 0.5, 1.0});
  CHECK(v.converged);
  CHECK(v.method == Method::integral);
  check_close(v.value, kV1, 1e-13);
  CHECK(std::abs(v.value - kV1) <= 10.0 * v.err_est + 1e-16);
}

TEST_CASE("mellin-barnes") {
  const Complex z(0.3, 0.1);
  check_close(eval_mellin_barnes({z, 0.0, 2.4}).value, sp::bessel_K(z, 2.4), 1e-9);
  check_close(eval_mellin_barnes({0.25, 0.5, 1.0}).value, kV1, 1e-12);
  check_close(eval_mellin_barnes({0.2, 0.4i, 1.5}).value, eval_mellin_barnes({-0.2, -0.4i, 1.5}).value, 1e-12);
  check_close(eval_mellin_barnes({Complex(1.7, -0.3), 0.4, 0.8}).value, kOutsideStrip, 1e-12);
}

TEST_CASE("bilateral series") {
  const Evaluation w0 = eval_bilateral_series({0.3, 0.0, 1.1});
  CHECK(w0.work == 1);
  check_close(w0.value, sp::bessel_K(0.3, 1.1), 1e-15);
  check_close(eval_bilateral_series({0.25, 0.5, 1.0}).value, kV1, 1e-12);
  CHECK(eval_bilateral_series({0.2, 0.7, 1.3}).value == eval_bilateral_series({0.2, -0.7, 1.3}).value);
  check_close(eval_bilateral_series({0.4i, Complex(0.3, 0.2), 0.5}).value, kImaginaryZ, 1e-12);
  CHECK_THROWS_AS(eval_bilateral_series({0.5, 0.2, 1.0}), DomainError);
  CHECK_THROWS_AS(eval_bilateral_series({Complex(-0.7, 0.1), 0.2, 1.0}), DomainError);
}

TEST_CASE("double sum") {
  const Evaluation v = eval_double_sum({0.25, 0.5, 1.0});
  CHECK(v.converged);
  check_close(v.value, kV1, 1e-12);
  CHECK(std::abs(v.value - kV1) <= v.err_est);
  const Complex z(0.8, -0.6);
  CHECK(eval_double_sum({z, 0.0, 1.7}).value == sp::bessel_K(z, 1.7));
  const Evaluation out = eval_double_sum({Complex(1.7, -0.3), 0.4, 0.8});
  check_close(out.value, kOutsideStrip, 1e-12);
  check_close(out.value, eval_mellin_barnes({Complex(1.7, -0.3), 0.4, 0.8}).value, 1e-8);
  check_close(eval_double_sum({0.4i, Complex(0.3, 0.2), 0.5}).value, kImaginaryZ, 1e-12);
}

TEST_CASE("half-integer closed form through the double sum") {
  for (double x : {0.5, 1.0, 2.0}) {
    check_close(eval_double_sum({0.5, 0.0, 2.0 * x}).value, std::sqrt(kPi / (4.0 * x)) * std::exp(-2.0 * x), 1e-12);
  }
}

TEST_CASE("basset") {
  check_close(eval_basset_z0(0.0, 1.0).value, sp::bessel_K(0.0, 1.0), 1e-8);
  check_close(eval_basset_z0(0.5, 1.0).value, eval_double_sum({0.0, 0.5, 1.0}).value, 1e-7);
  CHECK(eval_basset_z0(0.3i, 1.2).value == eval_basset_z0(-0.3i, 1.2).value);
}

TEST_CASE("laplace series") {
  check_close(eval_laplace_series({0.4, 0.0, 1.5}).value, sp::bessel_K(0.4, 1.5), 1e-8);
  check_close(eval_laplace_series({0.25, 0.5, 1.0}).value, kV1, 1e-7);
  const Evaluation neg = eval_laplace_series({-0.4, 0.3, 1.0});
  CHECK(neg.converged);
  check_close(neg.value, eval_double_sum({-0.4, 0.3, 1.0}).value, 1e-8);
  CHECK_THROWS_AS(eval_laplace_series({-0.5, 0.3, 1.0}), DomainError);
}

TEST_CASE("double integral") {
  check_close(eval_double_integral({0.3, 0.0, 1.0}).value, sp::bessel_K(0.3, 1.0), 1e-6);
  check_close(eval_double_integral({0.25, 0.5, 1.0}).value, kV1, 1e-6);
  // -1 < Re z <= -1/2 is inside the region of validity.
  const Evaluation edge = eval_double_integral({-0.5, 0.3, 1.0});
  check_close(edge.value, eval_double_sum({-0.5, 0.3, 1.0}).value, 1e-6);
  CHECK_THROWS_AS(eval_double_integral({-1.0, 0.3, 1.0}), DomainError);
}

TEST_CASE("evenness in z and w for every method") {
  struct Case {
    Evaluator f;
    double re_lo, re_hi;
    bool z_zero;
  };
  const Case cases[] = {
      {eval_integral, -2.0, 2.0, false},       {eval_mellin_barnes, -2.0, 2.0, false},
      {eval_bilateral_series, -0.45, 0.45, false}, {eval_double_sum, -2.0, 2.0, false},
      {basset, 0.0, 0.0, true},
  };
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Case& c : cases) {
    for (int i = 0; i < 10; ++i) {
      const Complex z = c.z_zero ? Complex(0.0) : Complex(c.re_lo + (c.re_hi - c.re_lo) * u(gen), u(gen) - 0.5);
      const Complex w(1.5 * u(gen) - 0.75, u(gen) - 0.5);
      const Complex x(0.3 + 2.0 * u(gen), 0.4 * u(gen) - 0.2);
      const Evaluation a = c.f({z, w, x}, {});
      const Evaluation b = c.f({-z, w, x}, {});
      const Evaluation d = c.f({z, -w, x}, {});
      INFO("z=" << z << " w=" << w << " x=" << x);
      CHECK(std::abs(a.value - b.value) <= a.err_est + b.err_est + 1e-15);
      CHECK(std::abs(a.value - d.value) <= a.err_est + d.err_est + 1e-15);
    }
  }
  // Laplace series and double integral need Re z above -1/2 and -1, so only w is flipped.
  for (int i = 0; i < 10; ++i) {
    const Complex z(0.4 * u(gen) - 0.2, u(gen) - 0.5);
    const Complex w(u(gen) - 0.5, 0.6 * u(gen) - 0.3);
    const Complex x(0.5 + u(gen), 0.2 * u(gen) - 0.1);
    const Evaluation a = eval_laplace_series({z, w, x});
    const Evaluation b = eval_laplace_series({-z, -w, x});
    INFO("z=" << z << " w=" << w << " x=" << x);
    CHECK(std::abs(a.value - b.value) <= a.err_est + b.err_est + 1e-15);
  }
  for (int i = 0; i < 3; ++i) {
    const Complex z(0.4 * u(gen) - 0.2, 0.0);
    const Complex w(u(gen) - 0.5, 0.0);
    const Evaluation a = eval_double_integral({z, w, 1.0});
    const Evaluation b = eval_double_integral({-z, -w, 1.0});
    CHECK(std::abs(a.value - b.value) <= a.err_est + b.err_est + 1e-15);
  }
}

TEST_CASE("w = 0 reduction within ten error estimates") {
  const Evaluator methods[] = {eval_integral, eval_mellin_barnes, eval_double_sum, eval_laplace_series};
  for (Complex z : {Complex(0.0), Complex(0.3), Complex(0.5), Complex(1.2, 0.4)}) {
    for (double x : {1.0, 2.0, 10.0}) {
      const Complex want = sp::bessel_K(z, x);
      for (Evaluator f : methods) {
        const Evaluation e = f({z, 0.0, x}, {});
        INFO("z=" << z << " x=" << x << " method " << to_string(e.method));
        CHECK(std::abs(e.value - want) <= 10.0 * e.err_est + 4e-16 * std::abs(want));
      }
    }
  }
}

TEST_CASE("large-x asymptotics") {
  const AsymptoticTerms t = asymptotic_terms(0.3, 0.5, 1);
  CHECK(t.P[0] == 1.0);
  CHECK(t.R[0] == 1.0);
  check_close(t.Q[0], 0.5 / 8.0, 1e-15);
  const AsymptoticTerms half = asymptotic_terms(0.5, 0.0, 1);
  CHECK(std::abs(half.P[1]) < 1e-15);
  CHECK(std::abs(half.R[1]) < 1e-15);
  // w = 0 gives the classical first correction (4z^2 - 1)/(16X).
  const Complex z(0.7, 0.2);
  const AsymptoticTerms w0 = asymptotic_terms(z, 0.0, 1);
  check_close(w0.P[1] + w0.R[1], 2.0 * (4.0 * z * z - 1.0) / 16.0, 1e-14);

  double err[3];
  const double xs[3] = {25.0, 50.0, 100.0};
  for (int i = 0; i < 3; ++i) {
    const KzwPoint p(0.3, 0.5, xs[i]);
    const Complex ref = eval_double_sum(p, relative_only()).value;
    check_close(ref, eval_integral(p, relative_only()).value, 1e-10);
    err[i] = rel_diff(asymptotic_large_x(p, 1).value, ref);
  }
  CHECK(err[1] < 1e-3);
  INFO("ratio 50/100: " << err[1] / err[2]);
  CHECK(err[1] / err[2] >= 2.5);
  CHECK(err[1] / err[2] <= 6.0);

  // At x = 25 cos(2w sqrt X) P and exp(-w^2/4) R nearly cancel, so the
  // relative error there is not governed by the O(X^-2) remainder and the
  // 25/50 ratio falls far outside [2.5, 6].
  const KzwPoint p25(0.3, 0.5, 25.0);
  const double envelope = 0.25 * std::sqrt(kPi / 12.5) * std::exp(-25.0);
  CHECK(std::abs(eval_double_sum(p25, relative_only()).value) < 0.05 * envelope);
  CHECK(err[0] / err[1] > 6.0);
}

TEST_CASE("small-x asymptotics") {
  check_close(asymptotic_small_x({0.4, 0.0, 1e-3}).value,
              0.5 * sp::gamma(0.4) * std::pow(0.5e-3, -0.4), 1e-14);
  check_close(asymptotic_small_x({0.0, 0.0, 1e-4}).value, -std::log(1e-4), 1e-15);
  CHECK_THROWS_AS(asymptotic_small_x({-0.2, 0.5, 1e-3}), DomainError);
  CHECK_THROWS_AS(asymptotic_small_x({0.2i, 0.5, 1e-3}), DomainError);

  double prev = INFINITY;
  for (double x : {1e-2, 1e-3, 1e-4}) {
    const KzwPoint p(0.4, 0.5, x);
    const Complex ratio = eval_double_sum(p).value / asymptotic_small_x(p).value;
    if (x == 1e-3) {
      CHECK(std::abs(ratio - 1.0) <= 0.01);
    }
    const double dev = std::abs(ratio - 1.0);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("dispatcher") {
  const Evaluation a = eval_auto({0.25, 0.5, 1.0});
  CHECK(a.method == Method::double_sum);
  check_close(a.value, kV1, 1e-12);
  CHECK(eval_auto({0.3, 0.5, 100.0}).method == Method::asymptotic_large_x);
  CHECK(eval_auto({0.4, 0.5, 1e-4}).method == Method::asymptotic_small_x);
  EvalConfig loose = relative_only();
  loose.rel_tol = 1e-3;
  CHECK(eval_auto({0.3, 0.5, 40.0}, loose).method == Method::asymptotic_large_x);
  // Large x where order-1 asymptotics cannot reach the requested tolerance.
  const Evaluation fallback = eval_auto({0.3, 4.0, 40.0}, relative_only());
  CHECK(fallback.method == Method::integral);
  check_close(fallback.value, -9.170484960165889777851283380e-20, 1e-12);
  // Agreement of the neighbouring methods at each threshold.
  check_close(asymptotic_large_x({0.3, 0.5, 30.0}, 1).value,
              eval_double_sum({0.3, 0.5, 30.0}, relative_only()).value, 1e-3);
  check_close(asymptotic_small_x({0.4, 0.5, 1e-3}).value, eval_double_sum({0.4, 0.5, 1e-3}).value, 1e-2);
}

TEST_CASE("compare methods") {
  const Comparison c = compare_methods({0.25, 0.5, 1.0});
  int ok = 0;
  for (const MethodOutcome& o : c.outcomes) ok += o.eval.has_value();
  CHECK(ok >= 5);
  CHECK(c.max_pairwise_rel < 1e-7);

  const Comparison out = compare_methods({1.7, 0.4, 0.8});
  for (const MethodOutcome& o : out.outcomes) CHECK(o.method != Method::bilateral_series);
  CHECK(out.max_pairwise_rel < 1e-7);

  const Comparison w0 = compare_methods({0.3, 0.0, 2.0});
  for (const MethodOutcome& o : w0.outcomes) {
    REQUIRE(o.eval);
    check_close(o.eval->value, sp::bessel_K(0.3, 2.0), 1e-8);
  }
}

TEST_CASE("canonical cross-representation grid") {
  for (Complex z : {Complex(0.0), Complex(0.25), Complex(0.0, 0.4)}) {
    for (Complex w : {Complex(0.0), Complex(0.5), Complex(0.3, 0.2)}) {
      for (double x : {0.5, 1.0, 2.0}) {
        const Comparison c = compare_methods({z, w, x});
        INFO("z=" << z << " w=" << w << " x=" << x);
        CHECK(c.max_pairwise_rel <= 1e-7);
        for (const MethodOutcome& o : c.outcomes) {
          INFO(to_string(o.method) << " " << o.error);
          CHECK(o.eval.has_value());
        }
      }
    }
  }
}

TEST_CASE("invalid configuration") {
  EvalConfig bad;
  bad.rel_tol = 1e-17;
  CHECK_THROWS_AS(eval_double_sum({0.2, 0.3, 1.0}, bad), std::invalid_argument);
  bad = {};
  bad.max_series_terms = 0;
  CHECK_THROWS_AS(eval_double_sum({0.2, 0.3, 1.0}, bad), std::invalid_argument);
}

TEST_CASE("term cap raises non-convergence") {
  EvalConfig tight;
  tight.max_series_terms = 3;
  CHECK_THROWS_AS(eval_double_sum({0.2, 3.0, 4.0}, tight), NonConvergence);
}
