#include "chebpv/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebpv/errors.hpp"

namespace chebpv {

namespace {

void check_degree(int degree) {
  if (degree < 0) {
    throw ArgumentError("degree must be non-negative, got " +
                        std::to_string(degree));
  }
}

void check_point(double x) {
  if (!(std::fabs(x) <= 1.0)) {
    throw DomainError("evaluation point " + std::to_string(x) +
                      " outside [-1, 1]");
  }
}

}  // namespace

double u_eval(int degree, double x) {
  check_degree(degree);
  check_point(x);
  double prev = 1.0;  // U_0
  if (degree == 0) return prev;
  double cur = 2.0 * x;  // U_1
  for (int j = 2; j <= degree; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> u_eval_all(int max_degree, double x) {
  check_degree(max_degree);
  check_point(x);
  std::vector<double> u(static_cast<std::size_t>(max_degree) + 1);
  u[0] = 1.0;
  if (max_degree >= 1) u[1] = 2.0 * x;
  for (int j = 2; j <= max_degree; ++j) u[j] = 2.0 * x * u[j - 1] - u[j - 2];
  return u;
}

double u_moment(int degree) {
  check_degree(degree);
  return degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
}

QuadratureRule gauss_u_rule(int node_count) {
  if (node_count < 1) {
    throw ArgumentError("gauss_u_rule: node count must be >= 1, got " +
                        std::to_string(node_count));
  }
  const int m = node_count;
  const double step = std::numbers::pi / (m + 1);

  QuadratureRule rule;
  rule.node_count = m;
  rule.angles.resize(m);
  rule.abscissae.resize(m);
  rule.weights.resize(m);

  for (int k = 1; k <= m; ++k) rule.angles[k - 1] = k * step;

  // First half from the trig formulas, second half mirrored so that
  // x_k = -x_{M+1-k} holds exactly, not just to rounding.
  for (int k = 1; k <= m / 2; ++k) {
    const double theta = rule.angles[k - 1];
    const double s = std::sin(theta);
    rule.abscissae[k - 1] = std::cos(theta);
    rule.weights[k - 1] = step * s * s;
    rule.abscissae[m - k] = -rule.abscissae[k - 1];
    rule.weights[m - k] = rule.weights[k - 1];
  }
  if (m % 2 == 1) {  // middle node sits at theta = pi/2 exactly
    rule.abscissae[m / 2] = 0.0;
    rule.weights[m / 2] = step;
  }
  return rule;
}

}  // namespace chebpv
