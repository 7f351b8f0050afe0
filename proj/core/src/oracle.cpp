#include "chebpv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chebpv/errors.hpp"

namespace chebpv::oracle {

namespace {

// Accepting an estimate before kMinDepth risks aliasing on oscillatory
// integrands: the first few dyadic sample sets can make the embedded pair
// agree by coincidence. 64 initial panels oversample every basis
// polynomial the moment checks integrate. kMaxDepth is the contract's
// hard cap.
constexpr int kMinDepth = 6;
constexpr int kMaxDepth = 50;

double sample(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw NonFiniteSample(x, "integrand returned a non-finite value at x = " +
                                 std::to_string(x));
  }
  return v;
}

// Association ((fa+fb) + 4*fm) keeps the rule invariant under interval
// mirroring, which lets symmetric excisions of odd integrands cancel
// exactly.
double simpson(double width, double fa, double fm, double fb) {
  return ((fa + fb) + 4.0 * fm) * (width / 6.0);
}

double refine(const std::function<double(double)>& f, double lo, double hi,
              double flo, double fmid, double fhi, double whole, double tol,
              int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lmid = 0.5 * (lo + mid);
  const double rmid = 0.5 * (mid + hi);
  if (lmid <= lo || rmid >= hi) return whole;  // interval at machine resolution

  const double flmid = sample(f, lmid);
  const double frmid = sample(f, rmid);
  const double left = simpson(mid - lo, flo, flmid, fmid);
  const double right = simpson(hi - mid, fmid, frmid, fhi);
  const double err = (left + right - whole) / 15.0;
  // Bisection cannot push the estimate below the noise of the panel sums.
  // Two contributions: rounding of the sums themselves, and the sample
  // abscissae being quantized to the x grid (that one scales like
  // |f'| * ulp(x) * width, dominant near an off-center pole where the
  // grid is much coarser than the pole distance).
  const double eps = std::numeric_limits<double>::epsilon();
  const double round_noise =
      eps * (std::fabs(left) + std::fabs(right) + std::fabs(whole));
  const double x_scale = std::max(std::fabs(lo), std::fabs(hi));
  const double x_ulp =
      std::nextafter(x_scale, std::numeric_limits<double>::infinity()) -
      x_scale;
  // paired so the sum is invariant under interval mirroring
  const double variation =
      (std::fabs(flo - flmid) + std::fabs(frmid - fhi)) +
      (std::fabs(flmid - fmid) + std::fabs(fmid - frmid));
  const double grid_noise = variation * x_ulp / 3.0;
  if (depth >= kMinDepth &&
      (std::fabs(err) <= tol || std::fabs(err) <= round_noise + grid_noise)) {
    return left + right + err;
  }
  if (depth >= kMaxDepth) {
    throw ToleranceNotMet("bisection depth cap " + std::to_string(kMaxDepth) +
                          " reached on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  const double half_tol = 0.5 * tol;
  return refine(f, lo, mid, flo, flmid, fmid, left, half_tol, depth + 1) +
         refine(f, mid, hi, fmid, frmid, fhi, right, half_tol, depth + 1);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double lo,
                     double hi, double tol) {
  if (!(lo <= hi)) {
    throw ArgumentError("adaptive_quad: lo = " + std::to_string(lo) +
                        " exceeds hi = " + std::to_string(hi));
  }
  if (!(tol > 0.0)) {
    throw ArgumentError("adaptive_quad: tolerance must be positive");
  }
  if (lo == hi) return 0.0;

  const double mid = 0.5 * (lo + hi);
  const double flo = sample(f, lo);
  const double fmid = sample(f, mid);
  const double fhi = sample(f, hi);
  return refine(f, lo, hi, flo, fmid, fhi, simpson(hi - lo, flo, fmid, fhi),
                tol, 0);
}

std::vector<double> richardson_extrapolants(const std::vector<double>& values,
                                            int order) {
  if (values.size() < 2) {
    throw ArgumentError("richardson needs at least 2 values, got " +
                        std::to_string(values.size()));
  }
  if (order < 1) {
    throw ArgumentError("extrapolation order must be >= 1");
  }
  std::vector<double> stage = values;
  const int passes =
      std::min<int>(order, static_cast<int>(values.size()) - 1);
  for (int t = 1; t <= passes; ++t) {
    const double factor = std::ldexp(1.0, t);  // 2^t
    for (std::size_t m = 0; m + 1 < stage.size(); ++m) {
      stage[m] = (factor * stage[m + 1] - stage[m]) / (factor - 1.0);
    }
    stage.pop_back();
  }
  return stage;
}

double richardson(const std::vector<double>& values, int order) {
  return richardson_extrapolants(values, order).back();
}

std::vector<double> excision_sequence(const Integrand& g,
                                      const ExcisionSpec& spec) {
  validate(g);
  const double r = std::min(g.s - g.a, g.b - g.s);
  const double delta0 = spec.delta0 > 0.0 ? spec.delta0 : 0.1 * r;
  if (!(delta0 > 0.0) || !(delta0 < r)) {
    throw ArgumentError("delta0 = " + std::to_string(delta0) +
                        " must lie in (0, min(s-a, b-s) = " +
                        std::to_string(r) + ")");
  }
  if (spec.levels < 2) {
    throw ArgumentError("excision needs at least 2 levels");
  }
  if (!(spec.quad_tolerance > 0.0)) {
    throw ArgumentError("quad tolerance must be positive");
  }

  std::vector<double> values(spec.levels);
  for (int m = 0; m < spec.levels; ++m) {
    const double delta = std::ldexp(delta0, -m);
    values[m] = adaptive_quad(g.f, g.a, g.s - delta, spec.quad_tolerance) +
                adaptive_quad(g.f, g.s + delta, g.b, spec.quad_tolerance);
  }
  return values;
}

ExcisionResult pv_excision(const Integrand& g, const ExcisionSpec& spec) {
  const std::vector<double> levels = excision_sequence(g, spec);
  const std::vector<double> extrapolants =
      richardson_extrapolants(levels, spec.extrapolation_order);

  ExcisionResult out;
  out.value = extrapolants.back();
  out.error_estimate =
      extrapolants.size() >= 2
          ? std::fabs(extrapolants.back() -
                      extrapolants[extrapolants.size() - 2])
          : std::fabs(out.value - levels.back());
  return out;
}

}  // namespace chebpv::oracle
