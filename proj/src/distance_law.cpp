#include "paswipt/distance_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace paswipt {
namespace {

double span_for(Scheme s, const RegionGeometry& g) {
  switch (s) {
    case Scheme::edge: return g.d_y_m;
    case Scheme::center: return 0.5 * g.d_y_m;
    case Scheme::diagonal: return g.diagonal_halfwidth_m;
  }
  return 0.0;
}

}  // namespace

SquaredDistanceLaw::SquaredDistanceLaw(Scheme scheme, const RegionGeometry& geometry)
    : scheme_(scheme),
      geometry_(geometry),
      h2_(geometry.height_m * geometry.height_m),
      span_(span_for(scheme, geometry)) {}

double SquaredDistanceLaw::cdf(double l) const {
  if (l <= h2_) return 0.0;
  if (l >= upper()) return 1.0;
  const double t = std::sqrt(l - h2_);
  if (scheme_ == Scheme::diagonal) return (2.0 * span_ * t - (l - h2_)) / (span_ * span_);
  return t / span_;
}

double SquaredDistanceLaw::pdf(double l) const {
  if (l == h2_) throw std::domain_error("squared-distance density is unbounded at l = h^2");
  if (l < h2_ || l > upper()) return 0.0;
  const double t = std::sqrt(l - h2_);
  if (scheme_ == Scheme::diagonal) return 1.0 / (span_ * t) - 1.0 / (span_ * span_);
  return 1.0 / (2.0 * span_ * t);
}

SquaredDistance SquaredDistanceLaw::sample(double u) const {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("inverse-CDF sampling needs u in (0, 1)");
  const double t = scheme_ == Scheme::diagonal ? span_ * (1.0 - std::sqrt(1.0 - u)) : u * span_;
  return SquaredDistance(h2_ + t * t);
}

double SquaredDistanceLaw::offset_density(double t) const {
  if (t < 0.0 || t > span_) return 0.0;
  if (scheme_ == Scheme::diagonal) return 2.0 / span_ * (1.0 - t / span_);
  return 1.0 / span_;
}

double SquaredDistanceLaw::expectation(const std::function<double(double)>& f,
                                       const QuadratureOptions& opts,
                                       std::span<const double> offset_breaks) const {
  std::vector<double> breaks{0.0};
  for (double t : offset_breaks)
    if (t > 0.0 && t < span_) breaks.push_back(t);
  breaks.push_back(span_);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const auto integrand = [&](double t) { return f(h2_ + t * t) * offset_density(t); };
  return integrate_piecewise(integrand, breaks, opts);
}

double ground_projection_cdf(const RegionGeometry& geometry, double x) {
  const double lam = geometry.diagonal_halfwidth_m;
  if (x <= 0.0) return 0.0;
  if (x >= lam) return 1.0;
  return (2.0 * lam * x - x * x) / (lam * lam);
}

}  // namespace paswipt
