#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "chebpv/chebyshev.hpp"
#include "chebpv/errors.hpp"

using namespace chebpv;

TEST_CASE("u_eval matches closed forms at simple points") {
  CHECK(u_eval(0, 0.73) == 1.0);
  CHECK(u_eval(2, 0.5) == 0.0);  // U_2 = 4x^2 - 1
  CHECK(u_eval(3, 1.0) == 4.0);  // U_j(1) = j+1
  CHECK(u_eval(5, -1.0) == -6.0);
  CHECK(u_eval(1, -0.25) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("u_eval rejects bad arguments") {
  CHECK_THROWS_AS(u_eval(3, 1.0000001), DomainError);
  CHECK_THROWS_AS(u_eval(3, -2.0), DomainError);
  CHECK_THROWS_AS(u_eval(3, std::nan("")), DomainError);
  CHECK_THROWS_AS(u_eval(-1, 0.5), ArgumentError);
  CHECK_THROWS_AS(u_eval_all(-1, 0.5), ArgumentError);
}

TEST_CASE("u_eval_all is bit-identical to u_eval") {
  for (double x : {-1.0, -0.999, -0.3, 0.0, 0.5, 1.0}) {
    const auto all = u_eval_all(30, x);
    REQUIRE(all.size() == 31);
    for (int j = 0; j <= 30; ++j) CHECK(all[j] == u_eval(j, x));
  }
  CHECK(u_eval_all(2, 0.5) == std::vector<double>{1.0, 1.0, 0.0});
  CHECK(u_eval_all(0, -0.2) == std::vector<double>{1.0});
  CHECK(u_eval_all(3, 0.0) == std::vector<double>{1.0, 0.0, -1.0, 0.0});
}

TEST_CASE("u_eval agrees with the trigonometric form away from |x|=1") {
  for (double x : {-0.999, -0.5, 0.0, 0.5, 0.999}) {
    const double theta = std::acos(x);
    for (int j = 0; j <= 30; ++j) {
      const double trig = std::sin((j + 1) * theta) / std::sin(theta);
      CHECK(u_eval(j, x) == doctest::Approx(trig).epsilon(1e-9));
    }
  }
}

TEST_CASE("u_eval parity is exact") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = dist(rng);
    for (int j = 0; j <= 40; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      CHECK(u_eval(j, -x) == sign * u_eval(j, x));
    }
  }
}

TEST_CASE("u_moment closed form") {
  CHECK(u_moment(0) == 2.0);
  CHECK(u_moment(1) == 0.0);
  CHECK(u_moment(6) == 2.0 / 7.0);
  for (int i = 0; i <= 50; ++i) {
    if (i % 2 == 1) {
      CHECK(u_moment(i) == 0.0);
    } else {
      CHECK(u_moment(i) == 2.0 / (i + 1));
    }
  }
  CHECK_THROWS_AS(u_moment(-3), ArgumentError);
}

TEST_CASE("gauss_u_rule small cases") {
  CHECK_THROWS_AS(gauss_u_rule(0), ArgumentError);

  const auto one = gauss_u_rule(1);
  CHECK(one.angles[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(one.abscissae[0] == 0.0);
  CHECK(one.weights[0] == doctest::Approx(std::numbers::pi / 2));

  const auto two = gauss_u_rule(2);
  CHECK(two.abscissae[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.abscissae[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(two.weights[0] == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(two.weights[1] == two.weights[0]);
}

TEST_CASE("gauss_u_rule invariants") {
  for (int m : {1, 2, 7, 8, 33, 64}) {
    const auto rule = gauss_u_rule(m);
    REQUIRE(rule.node_count == m);
    REQUIRE(rule.abscissae.size() == static_cast<std::size_t>(m));

    double weight_sum = 0.0;
    for (int k = 0; k < m; ++k) {
      CHECK(std::fabs(rule.abscissae[k]) < 1.0);
      CHECK(rule.weights[k] > 0.0);
      if (k > 0) CHECK(rule.abscissae[k] < rule.abscissae[k - 1]);
      weight_sum += rule.weights[k];
      // mirrored construction makes this exact, not merely 1e-15-close
      CHECK(rule.abscissae[k] == -rule.abscissae[m - 1 - k]);
    }
    CHECK(std::fabs(weight_sum - std::numbers::pi / 2) < 1e-12);
    if (m % 2 == 0) {
      for (int k = 0; k < m; ++k) CHECK(rule.abscissae[k] != 0.0);
    } else {
      CHECK(rule.abscissae[m / 2] == 0.0);
    }
  }
}

TEST_CASE("discrete orthogonality at M=16") {
  const int m = 16;
  const int n = 7;
  const auto rule = gauss_u_rule(m);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < m; ++k) {
        sum += rule.weights[k] * u_eval(i, rule.abscissae[k]) *
               u_eval(j, rule.abscissae[k]);
      }
      const double expected = i == j ? std::numbers::pi / 2 : 0.0;
      CHECK(std::fabs(sum - expected) < 1e-10);
    }
  }
}

TEST_CASE("rule integrates the weight exactly: sum of weights is pi/2") {
  const auto rule = gauss_u_rule(8);
  double sum = 0.0;
  for (double w : rule.weights) sum += w;
  CHECK(std::fabs(sum - std::numbers::pi / 2) < 1e-12);
}

// sum_k w_k U_i(x_k)/sqrt(1-x_k^2) is the trapezoid rule for the integral
// of sin((i+1)theta); its error is (i+1)pi^2/(6(M+1)^2), so the 1e-8
// agreement needs a large M (2^17 gives <= 2.0e-9 for i <= 20).
TEST_CASE("moment cross-check against the weighted node sum") {
  const int m = 1 << 17;
  const auto rule = gauss_u_rule(m);
  const int max_i = 20;
  std::vector<double> sums(max_i + 1, 0.0);
  for (int k = 0; k < m; ++k) {
    const double x = rule.abscissae[k];
    const double scale = rule.weights[k] / std::sqrt(1.0 - x * x);
    const auto u = u_eval_all(max_i, x);
    for (int i = 0; i <= max_i; ++i) sums[i] += scale * u[i];
  }
  for (int i = 0; i <= max_i; ++i) {
    CHECK(std::fabs(sums[i] - u_moment(i)) < 1e-8);
  }
}
