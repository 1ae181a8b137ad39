#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace paswipt {

/// Path-loss factor c^2 / (16 pi^2 f_c^2) in square meters.
/// Throws std::invalid_argument unless carrier_frequency_hz is finite and positive.
double derive_mu(double carrier_frequency_hz);

/// Radio constants plus everything derived from them. Only build through
/// validate() or SystemParams::make(); fields are never mutated afterwards.
struct SystemParams {
  double carrier_frequency_hz = 0.0;
  double noise_power_w = 0.0;
  double transmit_power_w = 0.0;

  double wavelength_m = 0.0;
  double mu_m2 = 0.0;           // path-loss factor (lambda / 4 pi)^2
  double transmit_snr = 0.0;    // P_t / sigma^2
  double wavenumber_per_m = 0.0;  // 2 pi / lambda; only enters the unit-modulus phase

  /// mu * transmit SNR, the numerator of every per-user SNR.
  double mu_snr_m2() const { return mu_m2 * transmit_snr; }

  static SystemParams make(double carrier_frequency_hz, double noise_power_w,
                           double transmit_power_w);
  SystemParams with_transmit_power(double transmit_power_w) const;
};

/// Hybrid protocol: alpha is the time fraction spent harvesting, beta the
/// fraction of received power routed to the harvester during that time.
struct ProtocolParams {
  double alpha = 0.0;
  double beta = 0.0;

  static ProtocolParams make(double alpha, double beta);
  /// Fraction of the normalized period available for decoding.
  double decoding_fraction() const { return 1.0 - alpha * beta; }
};

/// Service rectangle [0, d_x] x [0, d_y] on the ground, waveguide at height_m.
struct RegionGeometry {
  double d_x_m = 0.0;
  double d_y_m = 0.0;
  double height_m = 0.0;

  double aspect_k = 0.0;           // d_y / d_x, slope of the diagonal waveguide
  double diagonal_halfwidth_m = 0.0;  // d_x d_y / sqrt(d_x^2 + d_y^2)

  static RegionGeometry make(double d_x_m, double d_y_m, double height_m);
};

struct LinearHarvest {
  double eta = 1.0;
};

/// Logistic rectifier model, all fields SI. omega is the offset that pins the
/// output to zero at zero input.
struct LogisticHarvest {
  double phi_w = 0.0;
  double a_per_w = 0.0;
  double b_w = 0.0;
  double omega = 0.0;

  static LogisticHarvest make(double phi_w, double a_per_w, double b_w);
};

using HarvestModel = std::variant<LinearHarvest, LogisticHarvest>;

/// Logistic offset 1 / (1 + e^{ab}), evaluated without forming e^{ab}.
double logistic_offset(double a_per_w, double b_w);

struct FieldError {
  std::string field;
  std::string message;
};

/// Thrown when a configuration fails validation; carries every violation.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(std::vector<FieldError> errors);
  const std::vector<FieldError>& errors() const noexcept { return errors_; }

 private:
  std::vector<FieldError> errors_;
};

/// User-facing configuration, SI units. Built from defaults, a config file,
/// or CLI flags; nothing here is trusted until validate() accepts it.
struct ConfigInput {
  double carrier_frequency_hz = 28e9;
  double noise_power_w = 1e-12;  // -90 dBm
  std::optional<double> transmit_power_w;

  double alpha = 0.8;
  double beta = 0.8;

  double d_x_m = 15.0;
  double d_y_m = 10.0;
  double height_m = 3.0;

  double eta = 1.0;
  double phi_w = 20e-3;
  double a_per_w = 100e6;   // 100 / uW
  double b_w = 2.9e-6;
};

/// Fully validated configuration with derived constants populated.
struct Config {
  SystemParams system;
  ProtocolParams protocol;
  RegionGeometry geometry;
  LinearHarvest linear;
  LogisticHarvest logistic;

  Config with_transmit_power(double transmit_power_w) const;
  Config with_protocol(double alpha, double beta) const;
};

struct ValidationResult {
  std::optional<Config> config;
  std::vector<FieldError> errors;

  bool ok() const { return config.has_value(); }
};

/// Checks every field and reports all violations, not just the first.
ValidationResult validate(const ConfigInput& input);

/// validate() for callers that prefer exceptions.
Config validate_or_throw(const ConfigInput& input);

}  // namespace paswipt
