#include "paswipt/config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "paswipt/units.hpp"

namespace paswipt {
namespace {

using Errors = std::vector<FieldError>;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require_positive(Errors& errs, const char* field, double x, const char* unit) {
  if (!positive_finite(x)) {
    std::ostringstream os;
    os << "must be a finite positive value in " << unit << ", got " << x;
    errs.push_back({field, os.str()});
  }
}

void require_unit_interval(Errors& errs, const char* field, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "must lie in [0, 1], got " << x;
    errs.push_back({field, os.str()});
  }
}

void throw_if_any(Errors errs) {
  if (!errs.empty()) throw ConfigError(std::move(errs));
}

void check_system(Errors& errs, double fc, double noise, double pt) {
  require_positive(errs, "carrier_frequency_hz", fc, "Hz");
  require_positive(errs, "noise_power_w", noise, "W");
  require_positive(errs, "transmit_power_w", pt, "W");
}

void check_protocol(Errors& errs, double alpha, double beta) {
  require_unit_interval(errs, "alpha", alpha);
  require_unit_interval(errs, "beta", beta);
}

void check_geometry(Errors& errs, double dx, double dy, double h) {
  require_positive(errs, "d_x", dx, "m");
  require_positive(errs, "d_y", dy, "m");
  require_positive(errs, "height", h, "m");
}

void check_linear(Errors& errs, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    std::ostringstream os;
    os << "must lie in (0, 1], got " << eta;
    errs.push_back({"eta", os.str()});
  }
}

void check_logistic(Errors& errs, double phi, double a, double b) {
  require_positive(errs, "phi_w", phi, "W");
  require_positive(errs, "a_per_w", a, "1/W");
  require_positive(errs, "b_w", b, "W");
}

SystemParams build_system(double fc, double noise, double pt) {
  SystemParams s;
  s.carrier_frequency_hz = fc;
  s.noise_power_w = noise;
  s.transmit_power_w = pt;
  s.wavelength_m = kSpeedOfLight / fc;
  s.mu_m2 = derive_mu(fc);
  s.transmit_snr = pt / noise;
  s.wavenumber_per_m = 2.0 * std::numbers::pi / s.wavelength_m;
  return s;
}

RegionGeometry build_geometry(double dx, double dy, double h) {
  RegionGeometry g;
  g.d_x_m = dx;
  g.d_y_m = dy;
  g.height_m = h;
  g.aspect_k = dy / dx;
  g.diagonal_halfwidth_m = dx * dy / std::hypot(dx, dy);
  return g;
}

LogisticHarvest build_logistic(double phi, double a, double b) {
  return LogisticHarvest{phi, a, b, logistic_offset(a, b)};
}

std::string join(const std::vector<FieldError>& errors) {
  std::string out = "invalid configuration:";
  for (const auto& e : errors) out += " " + e.field + " " + e.message + ";";
  return out;
}

}  // namespace

double derive_mu(double carrier_frequency_hz) {
  if (!positive_finite(carrier_frequency_hz))
    throw std::invalid_argument("carrier frequency must be finite and positive");
  const double r = kSpeedOfLight / (4.0 * std::numbers::pi * carrier_frequency_hz);
  return r * r;
}

double logistic_offset(double a_per_w, double b_w) {
  const double e = std::exp(-a_per_w * b_w);
  return e / (1.0 + e);
}

SystemParams SystemParams::make(double fc, double noise, double pt) {
  Errors errs;
  check_system(errs, fc, noise, pt);
  throw_if_any(std::move(errs));
  return build_system(fc, noise, pt);
}

SystemParams SystemParams::with_transmit_power(double pt) const {
  return make(carrier_frequency_hz, noise_power_w, pt);
}

ProtocolParams ProtocolParams::make(double alpha, double beta) {
  Errors errs;
  check_protocol(errs, alpha, beta);
  throw_if_any(std::move(errs));
  return ProtocolParams{alpha, beta};
}

RegionGeometry RegionGeometry::make(double dx, double dy, double h) {
  Errors errs;
  check_geometry(errs, dx, dy, h);
  throw_if_any(std::move(errs));
  return build_geometry(dx, dy, h);
}

LogisticHarvest LogisticHarvest::make(double phi, double a, double b) {
  Errors errs;
  check_logistic(errs, phi, a, b);
  throw_if_any(std::move(errs));
  return build_logistic(phi, a, b);
}

ConfigError::ConfigError(std::vector<FieldError> errors)
    : std::invalid_argument(join(errors)), errors_(std::move(errors)) {}

Config Config::with_transmit_power(double pt) const {
  Config c = *this;
  c.system = system.with_transmit_power(pt);
  return c;
}

Config Config::with_protocol(double alpha, double beta) const {
  Config c = *this;
  c.protocol = ProtocolParams::make(alpha, beta);
  return c;
}

ValidationResult validate(const ConfigInput& in) {
  Errors errs;
  if (in.transmit_power_w) {
    check_system(errs, in.carrier_frequency_hz, in.noise_power_w, *in.transmit_power_w);
  } else {
    require_positive(errs, "carrier_frequency_hz", in.carrier_frequency_hz, "Hz");
    require_positive(errs, "noise_power_w", in.noise_power_w, "W");
    errs.push_back({"transmit_power_w", "is required (no default transmit power)"});
  }
  check_protocol(errs, in.alpha, in.beta);
  check_geometry(errs, in.d_x_m, in.d_y_m, in.height_m);
  check_linear(errs, in.eta);
  check_logistic(errs, in.phi_w, in.a_per_w, in.b_w);

  ValidationResult result;
  if (!errs.empty()) {
    result.errors = std::move(errs);
    return result;
  }
  Config c;
  c.system = build_system(in.carrier_frequency_hz, in.noise_power_w, *in.transmit_power_w);
  c.protocol = ProtocolParams{in.alpha, in.beta};
  c.geometry = build_geometry(in.d_x_m, in.d_y_m, in.height_m);
  c.linear = LinearHarvest{in.eta};
  c.logistic = build_logistic(in.phi_w, in.a_per_w, in.b_w);
  result.config = c;
  return result;
}

Config validate_or_throw(const ConfigInput& input) {
  auto r = validate(input);
  if (!r.ok()) throw ConfigError(std::move(r.errors));
  return *r.config;
}

}  // namespace paswipt
