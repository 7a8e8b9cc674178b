#pragma once

#include <functional>

#include "shnr/matrix.hpp"

namespace shnr {

/// Settings for suprema over the angle theta of the unit circle.
struct ThetaOptConfig {
  int grid_points = 720;          // uniform samples over [0, pi)
  double refine_tol = 1e-8;       // golden-section bracket width in theta
  int max_refine_iters = 200;     // cap on branch-and-bound subdivisions
  double value_rtol = 1e-12;      // stop when the certified gap is this small

  void validate() const;
};

struct CircleMax {
  double value = 0.0;   // best value found (a lower bound on the supremum)
  double theta = 0.0;   // where it was found, in [0, pi)
  double bound = 0.0;   // sup - value <= bound
  int evaluations = 0;
};

/// Maximizes f over [0, pi) assuming f(theta) = g(cos theta, sin theta)
/// for a seminorm g on R^2. That structure makes f pi-periodic and gives
/// max(f(a), f(b)) / cos((b - a)/2) as an upper bound on any arc [a, b],
/// which drives a branch-and-bound after a grid pass and golden-section
/// polish of the best bracket.
CircleMax maximize_seminorm_on_circle(const std::function<double(double)>& f,
                                      const ThetaOptConfig& cfg);

/// Golden-section search for a local maximum of f on [lo, hi].
/// Returns {argmax, value}.
std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double lo,
                                             double hi, double tol, int max_iters = 200);

/// Classical numerical radius w(M) = max_theta ||Re(e^{i theta} M)||.
CircleMax numerical_radius(const ComplexMatrix& m, const ThetaOptConfig& cfg = {});

}  // namespace shnr
