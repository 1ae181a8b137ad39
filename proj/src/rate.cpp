#include "paswipt/rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "paswipt/distance_law.hpp"

namespace paswipt {

std::string_view to_string(RateMethod m) {
  switch (m) {
    case RateMethod::closed_form: return "closed";
    case RateMethod::quadrature: return "quad";
    case RateMethod::monte_carlo: return "mc";
  }
  return "?";
}

double snr(const SystemParams& sys, SquaredDistance l) { return sys.mu_snr_m2() / l.value(); }

namespace rate_kernels {

double offset_log_integral(double span, double h, double m) {
  const double c = std::sqrt(m + h * h);
  return 2.0 * c * std::atan(span / c) - 2.0 * h * std::atan(span / h) +
         span * std::log1p(m / (h * h + span * span));
}

double diagonal_i1(double lam, double h, double m) {
  // At the default parameters m is ~2e5 m^2, so lam / c is ~1e-2 and atan
  // is evaluated far from any cancellation; no series form is needed.
  const double c = std::sqrt(m + h * h);
  return 4.0 * c * std::atan(lam / c) - 4.0 * h * std::atan(lam / h) +
         2.0 * lam * std::log1p(m / (lam * lam + h * h));
}

double diagonal_i2(double lam, double h, double m) {
  const double lo = h * h;
  const double hi = h * h + lam * lam;
  // m ln(hi + m) - m ln(lo + m) folded into one log1p to avoid cancelling
  // two large logarithms.
  return hi * std::log1p(m / hi) - lo * std::log1p(m / lo) + m * std::log1p(lam * lam / (lo + m));
}

}  // namespace rate_kernels

RateResult avg_rate_edge_center_closed(const DeploymentScheme& d, const SystemParams& sys,
                                       const ProtocolParams& proto) {
  if (d.kind == Scheme::diagonal)
    throw std::invalid_argument("edge/center rate formula called for the diagonal scheme");
  const double w = d.kind == Scheme::edge ? 1.0 : 2.0;
  const double span = d.geometry.d_y_m / w;
  const double integral =
      rate_kernels::offset_log_integral(span, d.geometry.height_m, sys.mu_snr_m2());
  const double v = proto.decoding_fraction() * w / (d.geometry.d_y_m * std::numbers::ln2) * integral;
  return {v, d.kind, RateMethod::closed_form};
}

RateResult avg_rate_diagonal_closed(const RegionGeometry& g, const SystemParams& sys,
                                    const ProtocolParams& proto) {
  const double lam = g.diagonal_halfwidth_m;
  const double m = sys.mu_snr_m2();
  const double i1 = rate_kernels::diagonal_i1(lam, g.height_m, m);
  const double i2 = rate_kernels::diagonal_i2(lam, g.height_m, m);
  const double v = proto.decoding_fraction() / std::numbers::ln2 * (i1 / lam - i2 / (lam * lam));
  return {v, Scheme::diagonal, RateMethod::closed_form};
}

RateResult avg_rate_closed(const DeploymentScheme& d, const SystemParams& sys,
                           const ProtocolParams& proto) {
  if (d.kind == Scheme::diagonal) return avg_rate_diagonal_closed(d.geometry, sys, proto);
  return avg_rate_edge_center_closed(d, sys, proto);
}

RateResult avg_rate_quadrature(const DeploymentScheme& d, const SystemParams& sys,
                               const ProtocolParams& proto, const QuadratureOptions& opts) {
  const SquaredDistanceLaw law(d);
  const double m = sys.mu_snr_m2();
  const double mean_nats = law.expectation([m](double l) { return std::log1p(m / l); }, opts);
  return {proto.decoding_fraction() * mean_nats / std::numbers::ln2, d.kind, RateMethod::quadrature};
}

}  // namespace paswipt
