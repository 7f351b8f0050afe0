#include "chebpv/pv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "chebpv/errors.hpp"

namespace chebpv {

void validate(const Integrand& g) {
  if (!g.f) {
    throw ArgumentError("integrand function is empty");
  }
  if (!(g.a < g.b)) {
    throw InvalidInterval("interval [" + std::to_string(g.a) + ", " +
                          std::to_string(g.b) + "] is empty or reversed");
  }
  if (!(g.a < g.s && g.s < g.b)) {
    throw EndpointSingularity("singularity s = " + std::to_string(g.s) +
                              " must lie strictly inside (" +
                              std::to_string(g.a) + ", " + std::to_string(g.b) +
                              ")");
  }
  if (!(g.p > 0.0)) {
    throw ArgumentError("singularity order p must be positive, got " +
                        std::to_string(g.p));
  }
  if (g.p > 1.0) {
    throw HypersingularUnsupported(
        "order p = " + std::to_string(g.p) +
        " > 1 is hypersingular; Hadamard finite-part integrals are not "
        "supported");
  }
}

std::vector<NormalizedPiece> normalize(const Integrand& g) {
  validate(g);
  const double r = std::min(g.s - g.a, g.b - g.s);
  const auto f = g.f;
  const double s = g.s;

  std::vector<NormalizedPiece> pieces;
  pieces.push_back({s - r, s + r,
                    [f, s, r](double t) { return r * f(s + r * t); }, true});

  // At most one side extends past the symmetric window.
  double lo = 0.0, hi = 0.0;
  bool have_remainder = false;
  if (g.s - g.a > r) {
    lo = g.a;
    hi = s - r;
    have_remainder = true;
  } else if (g.b - g.s > r) {
    lo = s + r;
    hi = g.b;
    have_remainder = true;
  }
  if (have_remainder) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    pieces.push_back(
        {lo, hi,
         [f, center, half](double t) { return half * f(center + half * t); },
         false});
  }
  return pieces;
}

PVResult pv_integrate(const Integrand& g, const PVConfig& cfg) {
  if (cfg.degree < 0) {
    throw ArgumentError("degree must be non-negative, got " +
                        std::to_string(cfg.degree));
  }
  if (cfg.node_count < 0) {
    throw ArgumentError("node count must be positive or 0 for automatic");
  }
  const int m = cfg.resolved_node_count();

  PVResult result;
  result.converged = true;
  for (const NormalizedPiece& piece : normalize(g)) {
    ChebyshevSeries series = project(piece.mapped, cfg.degree, m);
    const double value = integrate_series(series);
    if (!(series.tail_ratio <= cfg.tail_tolerance)) result.converged = false;
    result.value += value;
    result.pieces.push_back(
        {piece.lo, piece.hi, value, piece.is_singular, std::move(series)});
  }
  return result;
}

}  // namespace chebpv
