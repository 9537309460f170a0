#include <cmath>

#include "ceis/ce.hpp"
#include "ceis/efficiency.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace ceis;

TEST_CASE("runs_naive") {
  CHECK(runs_naive(0.5, 1.0, 1.0) == 1.0);
  // Published run counts for 5% accuracy at 95% confidence.
  CHECK(runs_naive(3.9186e-6, 0.05, 1.96) == doctest::Approx(392140000.0).epsilon(1e-4));
  CHECK(runs_naive(2.2133e-5, 0.05, 1.96) == doctest::Approx(69427000.0).epsilon(1e-3));
  CHECK_THROWS_AS(runs_naive(0.0, 0.05, 1.96), DomainError);
  CHECK_THROWS_AS(runs_naive(1.0, 0.05, 1.96), DomainError);
  CHECK_THROWS_AS(runs_naive(0.5, 0.0, 1.96), DomainError);
}

TEST_CASE("runs_is") {
  CHECK(runs_is(0.25 * 0.25, 0.25, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(runs_is(0.0, 0.1, 0.05, 1.96) == 0.0);
  CHECK_THROWS_AS(runs_is(-1e-30, 0.1, 0.05, 1.96), DomainError);
  CHECK_THROWS_AS(runs_is(1.0, 0.0, 0.05, 1.96), DomainError);
}

TEST_CASE("relative_error") {
  EstimateResult r;
  r.p_hat = 0.5;
  r.variance = 0.25;
  r.n = 10000;
  CHECK(relative_error(r, 1.96) == doctest::Approx(0.0196));
  r.p_hat = 0.0;
  CHECK(std::isinf(relative_error(r, 1.96)));
}

TEST_CASE("make_report ties the counts together") {
  EstimateResult r;
  r.p_hat = 1e-6;
  r.variance = 1.5e-12;
  r.n = 10000;
  const auto rep = make_report(r, 0.05, 1.96);
  CHECK(rep.p_ref == 1e-6);
  CHECK(rep.runs_naive == doctest::Approx(runs_naive(1e-6, 0.05, 1.96)));
  CHECK(rep.runs_is == doctest::Approx(1.5 * 1536.64));
  CHECK(rep.gain == doctest::Approx(rep.runs_naive / rep.runs_is));
}

TEST_CASE("relative error shrinks like 1/sqrt(n)") {
  const auto s = test::ln_scenario(2);
  const double gamma0 = threshold_linear(-5.0, 10.0);
  CEConfig cfg;
  cfg.seed = 12;
  const auto opt = ce_optimize(s, gamma0, cfg);
  // Average over replications so the ratio reflects the expected scaling.
  auto mean_re = [&](std::uint64_t n) {
    double acc = 0.0;
    for (int k = 0; k < 20; ++k) acc += is_estimate(s, gamma0, opt.nu, n, derive_seed(n, k)).relative_error;
    return acc / 20.0;
  };
  const double re3 = mean_re(1000);
  const double re4 = mean_re(10000);
  const double re5 = mean_re(100000);
  CHECK(re3 / re4 == doctest::Approx(std::sqrt(10.0)).epsilon(0.2));
  CHECK(re4 / re5 == doctest::Approx(std::sqrt(10.0)).epsilon(0.2));
}
