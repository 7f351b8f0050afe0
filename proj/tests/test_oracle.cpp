#include <cmath>
#include <functional>
#include <vector>

#include <doctest.h>

#include "chebpv/errors.hpp"
#include "chebpv/oracle.hpp"
#include "chebpv/pv.hpp"
#include "support/analytic.hpp"

using namespace chebpv;
using oracle::ExcisionSpec;
using oracle::adaptive_quad;
using oracle::excision_sequence;
using oracle::pv_excision;
using oracle::richardson;
using oracle::richardson_extrapolants;

TEST_CASE("adaptive_quad on smooth integrands") {
  CHECK(std::fabs(adaptive_quad([](double) { return 1.0; }, 0, 1, 1e-12) -
                  1.0) < 1e-12);
  CHECK(std::fabs(adaptive_quad([](double x) { return x * x; }, -1, 1, 1e-12) -
                  2.0 / 3.0) < 1e-12);
  CHECK(std::fabs(adaptive_quad([](double x) { return std::exp(x); }, 0, 1,
                                1e-12) -
                  (std::exp(1.0) - 1.0)) < 1e-12);
}

TEST_CASE("adaptive_quad edge cases") {
  const auto f = [](double x) { return x; };
  CHECK(adaptive_quad(f, 0.5, 0.5, 1e-12) == 0.0);
  CHECK_THROWS_AS(adaptive_quad(f, 1.0, 0.0, 1e-12), ArgumentError);
  CHECK_THROWS_AS(adaptive_quad(f, 0.0, 1.0, 0.0), ArgumentError);
  CHECK_THROWS_AS(adaptive_quad([](double x) { return 1.0 / x; }, 0, 1, 1e-10),
                  NonFiniteSample);
}

TEST_CASE("adaptive_quad reports an unreachable tolerance") {
  // near the left endpoint the oscillation is far below any width 50
  // bisections can reach, so the error estimate never meets the tolerance
  const auto wild = [](double x) { return std::sin(1.0 / x); };
  CHECK_THROWS_AS(adaptive_quad(wild, 1e-9, 1.0, 1e-16), ToleranceNotMet);
}

TEST_CASE("richardson eliminates the modeled error powers") {
  CHECK(richardson({0.7365, 0.7365, 0.7365}, 2) == 0.7365);

  const double limit = 1.25;
  const double delta0 = 0.3;
  std::vector<double> first_order(6);
  for (int m = 0; m < 6; ++m) {
    first_order[m] = limit + delta0 * std::ldexp(1.0, -m);
  }
  CHECK(std::fabs(richardson(first_order, 1) - limit) < 1e-12);

  std::vector<double> mixed(8);
  for (int m = 0; m < 8; ++m) {
    const double delta = delta0 * std::ldexp(1.0, -m);
    mixed[m] = limit + 0.8 * delta - 2.4 * delta * delta;
  }
  CHECK(std::fabs(richardson(mixed, 2) - limit) < 1e-10);

  CHECK_THROWS_AS(richardson({1.0}, 2), ArgumentError);
  CHECK_THROWS_AS(richardson({1.0, 2.0}, 0), ArgumentError);
  // passes clamp to length-1
  CHECK(std::fabs(richardson({limit + 0.3, limit + 0.15}, 5) - limit) < 1e-12);
}

TEST_CASE("richardson_extrapolants final stage length") {
  const std::vector<double> values{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(richardson_extrapolants(values, 1).size() == 4);
  CHECK(richardson_extrapolants(values, 2).size() == 3);
  CHECK(richardson_extrapolants(values, 9).size() == 1);
}

TEST_CASE("excision of 1/x is exactly zero at every level") {
  Integrand g{[](double x) { return 1.0 / x; }, -1.0, 1.0, 0.0, 1.0};
  for (double level : excision_sequence(g)) CHECK(level == 0.0);
  const auto result = pv_excision(g);
  CHECK(std::fabs(result.value) < 1e-12);
}

TEST_CASE("symmetric excision is exact for odd integrands about 0") {
  const auto odd_cases = {
      std::function<double(double)>([](double x) { return 1.0 / x; }),
      std::function<double(double)>([](double x) { return x * x / x; }),
      std::function<double(double)>(
          [](double x) { return 1.0 / ((2.0 + x * x) * x); }),
  };
  for (const auto& f : odd_cases) {
    Integrand g{f, -1.0, 1.0, 0.0, 1.0};
    for (double level : excision_sequence(g)) {
      CHECK(std::fabs(level) < 1e-12);
    }
  }
}

TEST_CASE("excision recovers the off-center pole value") {
  Integrand g{[](double x) { return 1.0 / (x - 0.5); }, -1.0, 1.0, 0.5, 1.0};
  const auto result = pv_excision(g);
  CHECK(std::fabs(result.value - testref::kLnOneThird) < 1e-9);
}

TEST_CASE("excision matches 2*Shi(1) for exp(x)/x") {
  Integrand g{[](double x) { return std::exp(x) / x; }, -1.0, 1.0, 0.0, 1.0};
  const auto result = pv_excision(g);
  CHECK(std::fabs(result.value - testref::kTwoShiOne) < 1e-9);
  CHECK(result.error_estimate < 1e-9);
}

TEST_CASE("excision levels refine monotonically toward the limit") {
  Integrand g{[](double x) { return std::exp(x) / x; }, -1.0, 1.0, 0.0, 1.0};
  const auto levels = excision_sequence(g);
  REQUIRE(levels.size() == 12);
  for (std::size_t m = 1; m + 1 < levels.size(); ++m) {
    const double err_here = std::fabs(levels[m] - testref::kTwoShiOne);
    const double err_next = std::fabs(levels[m + 1] - testref::kTwoShiOne);
    CHECK(err_next < err_here);
  }
}

TEST_CASE("excision spec validation") {
  Integrand g{[](double x) { return 1.0 / x; }, -1.0, 1.0, 0.0, 1.0};
  ExcisionSpec spec;
  spec.delta0 = 1.5;  // >= min(s-a, b-s)
  CHECK_THROWS_AS(excision_sequence(g, spec), ArgumentError);
  spec.delta0 = 0.0;
  spec.levels = 1;
  CHECK_THROWS_AS(excision_sequence(g, spec), ArgumentError);
  spec.levels = 12;
  spec.quad_tolerance = 0.0;
  CHECK_THROWS_AS(excision_sequence(g, spec), ArgumentError);
  Integrand bad{[](double x) { return 1.0 / x; }, -1.0, 1.0, 0.0, 2.0};
  CHECK_THROWS_AS(excision_sequence(bad, ExcisionSpec{}),
                  HypersingularUnsupported);
}

TEST_CASE("oracle agrees with the expansion pipeline") {
  const auto numerators = {
      std::function<double(double)>([](double) { return 1.0; }),
      std::function<double(double)>([](double x) { return x * x; }),
      std::function<double(double)>([](double x) { return std::cos(x); }),
      std::function<double(double)>([](double x) { return std::exp(x); }),
      std::function<double(double)>(
          [](double x) { return 1.0 / (2.0 + x); }),
  };
  PVConfig cfg;
  cfg.degree = 48;
  for (const auto& h : numerators) {
    Integrand g{[h](double x) { return h(x) / x; }, -1.0, 1.0, 0.0, 1.0};
    const double via_series = pv_integrate(g, cfg).value;
    const auto via_excision = pv_excision(g);
    const double tol = std::max(1e-6, 10.0 * via_excision.error_estimate);
    CHECK(std::fabs(via_series - via_excision.value) < tol);
  }
}
