#include "chebpv/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "chebpv/chebyshev.hpp"
#include "chebpv/errors.hpp"

namespace chebpv {

int tail_window(int degree) { return std::max(3, degree / 8); }

ChebyshevSeries::ChebyshevSeries(std::vector<double> coeffs, int nodes)
    : coefficients(std::move(coeffs)), node_count(nodes) {
  if (coefficients.empty()) {
    throw ArgumentError("a series needs at least one coefficient");
  }
  double overall = 0.0;
  for (double a : coefficients) {
    if (!std::isfinite(a)) {
      throw ArgumentError("series coefficients must be finite");
    }
    overall = std::max(overall, std::fabs(a));
  }
  if (overall > 0.0) {
    const auto window = std::min<std::size_t>(tail_window(degree()),
                                              coefficients.size());
    double tail = 0.0;
    for (std::size_t i = coefficients.size() - window;
         i < coefficients.size(); ++i) {
      tail = std::max(tail, std::fabs(coefficients[i]));
    }
    tail_ratio = tail / overall;
  }
}

ChebyshevSeries project(const std::function<double(double)>& f, int degree,
                        int node_count) {
  if (degree < 0) {
    throw ArgumentError("projection degree must be non-negative");
  }
  if (node_count % 2 != 0) {
    throw ArgumentError("projection node count must be even, got " +
                        std::to_string(node_count));
  }
  if (node_count < degree + 1) {
    throw ArgumentError("projection needs node count >= degree+1, got M = " +
                        std::to_string(node_count) + " for degree " +
                        std::to_string(degree));
  }

  const int m = node_count;
  const QuadratureRule rule = gauss_u_rule(m);

  std::vector<double> samples(m);
  for (int k = 0; k < m; ++k) {
    samples[k] = f(rule.abscissae[k]);
    if (!std::isfinite(samples[k])) {
      throw NonFiniteSample(rule.abscissae[k],
                            "integrand returned a non-finite value at x = " +
                                std::to_string(rule.abscissae[k]));
    }
  }

  // a_i = (2/pi) sum_k w_k U_i(x_k) f(x_k), accumulated over the symmetric
  // node pairs (k, M+1-k) with U_i(-x) = (-1)^i U_i(x) applied analytically.
  // The recurrence is parity-exact in IEEE arithmetic, so for an odd sample
  // vector the even-index pair contributions are exactly zero.
  std::vector<double> acc(static_cast<std::size_t>(degree) + 1, 0.0);
  std::vector<double> u(acc.size());
  for (int k = 0; k < m / 2; ++k) {
    const double x = rule.abscissae[k];
    const double w = rule.weights[k];
    const double fp = samples[k];
    const double fm = samples[m - 1 - k];
    u[0] = 1.0;
    if (degree >= 1) u[1] = 2.0 * x;
    for (int j = 2; j <= degree; ++j) u[j] = 2.0 * x * u[j - 1] - u[j - 2];
    for (int i = 0; i <= degree; ++i) {
      const double pair = i % 2 == 0 ? fp + fm : fp - fm;
      acc[i] += w * u[i] * pair;
    }
  }
  const double scale = 2.0 / std::numbers::pi;
  for (double& a : acc) a *= scale;

  return ChebyshevSeries(std::move(acc), m);
}

double series_eval(const ChebyshevSeries& s, double x) {
  if (!(std::fabs(x) <= 1.0)) {
    throw DomainError("evaluation point " + std::to_string(x) +
                      " outside [-1, 1]");
  }
  // Clenshaw: b_j = a_j + 2x b_{j+1} - b_{j+2}; since U_1 = 2x U_0 the
  // correction term vanishes and the sum is b_0.
  double b1 = 0.0;
  double b2 = 0.0;
  const double t = 2.0 * x;
  for (int j = s.degree(); j >= 0; --j) {
    const double b0 = s.coefficients[j] + t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

double integrate_series(const ChebyshevSeries& s) {
  double total = 0.0;
  for (int i = 0; i <= s.degree(); i += 2) {
    total += s.coefficients[i] * (2.0 / (i + 1));
  }
  return total;
}

double tail_decay(const ChebyshevSeries& s) { return s.tail_ratio; }

}  // namespace chebpv
