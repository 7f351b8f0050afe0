#pragma once

#include <functional>
#include <vector>

#include "chebpv/expansion.hpp"

namespace chebpv {

/// An integrand f on [a, b] with a declared singularity at s of order p,
/// i.e. f behaves like u(x)/(x - s)^p near s. p < 1 is weakly singular,
/// p = 1 strongly singular (Cauchy principal value); p > 1 is rejected.
struct Integrand {
  std::function<double(double)> f;
  double a = -1.0;
  double b = 1.0;
  double s = 0.0;
  double p = 1.0;
};

struct PVConfig {
  int degree = 64;
  int node_count = 0;  // 0 = automatic: 2*degree + 16 (even by construction)
  double tail_tolerance = 1e-8;

  int resolved_node_count() const {
    return node_count > 0 ? node_count : 2 * degree + 16;
  }
};

/// One subinterval of [a, b], affinely mapped onto [-1, 1] with the
/// Jacobian folded into the mapped function. For the singular piece the
/// singularity lands exactly at t = 0.
struct NormalizedPiece {
  double lo = 0.0;
  double hi = 0.0;
  std::function<double(double)> mapped;
  bool is_singular = false;
};

struct PieceResult {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  bool is_singular = false;
  ChebyshevSeries series;
};

struct PVResult {
  double value = 0.0;
  std::vector<PieceResult> pieces;  // singular window first
  bool converged = false;           // every piece's tail_ratio <= tail_tolerance
};

/// Throws InvalidInterval (a >= b), EndpointSingularity (s not strictly
/// inside), ArgumentError (p <= 0), or HypersingularUnsupported (p > 1).
void validate(const Integrand& g);

/// Splits [a, b] into the symmetric singular window [s-r, s+r] with
/// r = min(s-a, b-s), plus at most one regular remainder interval, each
/// mapped onto [-1, 1]. The symmetric window is what makes the discrete
/// principal-value cancellation exact; the remainder is absent when s is
/// the exact midpoint. Singular piece first.
std::vector<NormalizedPiece> normalize(const Integrand& g);

/// Projects every normalized piece onto the U basis and integrates the
/// series by closed-form moments. value is the piece sum in piece order;
/// converged reflects the tail diagnostics and is advisory only.
PVResult pv_integrate(const Integrand& g, const PVConfig& cfg = {});

}  // namespace chebpv
