#include "paswipt/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace paswipt {

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, opts.max_depth, opts.rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > opts.rel_tol * l1) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] did not converge: value " << value
       << ", error estimate " << error << ", requested relative tolerance " << opts.rel_tol;
    throw QuadratureError(os.str());
  }
  return value;
}

double integrate_piecewise(const std::function<double(double)>& f, std::span<const double> breakpoints,
                           const QuadratureOptions& opts) {
  if (breakpoints.size() < 2) throw std::invalid_argument("need at least two breakpoints");
  double total = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    total += integrate(f, breakpoints[i - 1], breakpoints[i], opts);
  return total;
}

}  // namespace paswipt
