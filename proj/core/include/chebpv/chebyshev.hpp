#pragma once

#include <vector>

namespace chebpv {

/// U_j(x), the Chebyshev polynomial of the second kind, for |x| <= 1.
///
/// Evaluated by the three-term recurrence U_0 = 1, U_1 = 2x,
/// U_{j+1} = 2x U_j - U_{j-1}. The trigonometric form
/// sin((j+1) acos x)/sin(acos x) is 0/0 at |x| = 1; the recurrence
/// reproduces the limit (j+1) sign(x)^j there exactly.
double u_eval(int degree, double x);

/// [U_0(x), ..., U_n(x)] from a single forward pass of the same
/// recurrence; element j is bit-identical to u_eval(j, x).
std::vector<double> u_eval_all(int max_degree, double x);

/// Exact integral of U_i over [-1, 1]: 0 for odd i, 2/(i+1) for even i.
double u_moment(int degree);

/// M-point Gauss-Chebyshev rule for the weight sqrt(1 - x^2):
/// theta_k = k pi/(M+1), x_k = cos theta_k, w_k = (pi/(M+1)) sin^2 theta_k.
/// Integrates q(x) sqrt(1 - x^2) exactly for polynomials q up to degree
/// 2M - 1. Abscissae are strictly decreasing; the node set satisfies
/// x_k = -x_{M+1-k} exactly, and 0 is a node only when M is odd.
struct QuadratureRule {
  int node_count = 0;
  std::vector<double> angles;
  std::vector<double> abscissae;
  std::vector<double> weights;
};

QuadratureRule gauss_u_rule(int node_count);

}  // namespace chebpv
