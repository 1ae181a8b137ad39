#pragma once

#include <functional>
#include <span>
#include <stdexcept>

namespace paswipt {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  unsigned max_depth = 30;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. Converged means the error
/// estimate is within rel_tol of the integral of |f|; otherwise throws
/// QuadratureError.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Same, integrating piecewise between consecutive sorted breakpoints, which
/// must include both ends of the range.
double integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           const QuadratureOptions& opts = {});

}  // namespace paswipt
