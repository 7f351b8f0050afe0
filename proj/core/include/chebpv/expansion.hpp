#pragma once

#include <functional>
#include <vector>

namespace chebpv {

/// Truncated expansion sum_j a_j U_j(x) on [-1, 1].
struct ChebyshevSeries {
  /// Validates that the coefficient list is non-empty and finite, and
  /// computes tail_ratio. node_count records the M used by project();
  /// pass 0 for a series built directly from coefficients.
  explicit ChebyshevSeries(std::vector<double> coeffs, int node_count = 0);

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  std::vector<double> coefficients;  // index = basis degree
  int node_count = 0;
  double tail_ratio = 0.0;  // max |a_i| over the tail window / max |a_i| overall
};

/// Tail window length for a series of the given degree: max(3, degree/8).
int tail_window(int degree);

/// Coefficients of f against the U basis by M-point Gauss-Chebyshev
/// quadrature of a_i = (2/pi) integral f(x) U_i(x) sqrt(1-x^2) dx:
///
///   a_i = (2/(M+1)) sum_k sin(theta_k) sin((i+1) theta_k) f(x_k)
///
/// f is sampled exactly once at each of the M nodes. M must be even —
/// the node set then excludes 0, so f may be singular there, and the
/// nodes come in exact +/- pairs. The sum is accumulated over those
/// pairs with U_i(-x) = (-1)^i U_i(x) applied analytically, so for an
/// odd integrand every even-index coefficient cancels to exactly zero:
/// the discrete realization of the principal value.
///
/// Throws ArgumentError (M odd or M < degree+1) and NonFiniteSample.
ChebyshevSeries project(const std::function<double(double)>& f, int degree,
                        int node_count);

/// sum_j a_j U_j(x) by the backward Clenshaw recurrence.
double series_eval(const ChebyshevSeries& s, double x);

/// sum_i a_i * u_moment(i). Only even indices contribute.
double integrate_series(const ChebyshevSeries& s);

/// The series' tail_ratio diagnostic (0 for the all-zero series).
double tail_decay(const ChebyshevSeries& s);

}  // namespace chebpv
