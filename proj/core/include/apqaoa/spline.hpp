#pragma once

#include <vector>

namespace apqaoa {

/// Natural cubic spline through (x_i, y_i) with strictly increasing x.
/// Second derivatives vanish at both ends.
class NaturalCubicSpline {
 public:
  NaturalCubicSpline(std::vector<double> x, std::vector<double> y);

  /// Evaluates the interpolant. Arguments outside [x_0, x_{n-1}] are clamped
  /// to the end nodes.
  double operator()(double t) const;

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace apqaoa
