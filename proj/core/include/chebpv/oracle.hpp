#pragma once

#include <functional>
#include <vector>

#include "chebpv/pv.hpp"

namespace chebpv::oracle {

/// Reference principal-value integrator: integrate over the domain with a
/// symmetric ball of radius delta excised around the singularity, for a
/// geometric ladder of deltas, and extrapolate to delta -> 0. Slow and
/// independent of the expansion pipeline; exists to cross-check it.
struct ExcisionSpec {
  double delta0 = 0.0;  // initial excision half-width; 0 = 0.1*min(s-a, b-s)
  int levels = 12;      // delta_m = delta0 * 2^-m, m = 0..levels-1
  double quad_tolerance = 1e-12;
  int extrapolation_order = 2;
};

/// Recursive bisection with an embedded low/high-order Simpson pair.
/// Estimated absolute error <= tol. Depth cap 50; exceeding it throws
/// ToleranceNotMet. Non-finite samples throw NonFiniteSample.
double adaptive_quad(const std::function<double(double)>& f, double lo,
                     double hi, double tol);

/// Polynomial extrapolation of values v_m taken at step parameters
/// delta_m = delta0 * 2^-m, assuming error model c1*delta + c2*delta^2 + ...
/// Eliminates powers delta^1..delta^order (passes clamped to len-1) and
/// returns the final stage, length len - passes.
std::vector<double> richardson_extrapolants(const std::vector<double>& values,
                                            int order);

/// Highest-order extrapolant: richardson_extrapolants(...).back().
double richardson(const std::vector<double>& values, int order);

/// I(delta_m) = integral over [a, s-delta_m] + [s+delta_m, b] for each
/// level, by adaptive_quad at spec.quad_tolerance.
std::vector<double> excision_sequence(const Integrand& g,
                                      const ExcisionSpec& spec = {});

struct ExcisionResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |difference of the last two extrapolants|
};

ExcisionResult pv_excision(const Integrand& g, const ExcisionSpec& spec = {});

}  // namespace chebpv::oracle
