#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paswipt/config.hpp"
#include "paswipt/energy.hpp"
#include "paswipt/geometry.hpp"
#include "paswipt/montecarlo.hpp"

namespace paswipt {

enum class Experiment { energy_vs_power, rate_vs_power, energy_rate_region };
std::string_view to_string(Experiment e);  // "energy", "rate", "region"
Experiment parse_experiment(std::string_view name);

/// Transmit-power axis. Log-spaced by default.
struct PowerGrid {
  double min_w = 0.01;
  double max_w = 1.0;
  std::size_t points = 50;
  bool log_spaced = true;

  std::vector<double> values() const;
};

struct SweepMethods {
  bool closed = true;
  bool bound = true;
  bool quadrature = true;
  bool monte_carlo = false;
};

enum class SweepMethod { closed, bound, quad, mc };
std::string_view to_string(SweepMethod m);  // "closed", "bound", "quad", "mc"

struct SweepSpec {
  Experiment experiment = Experiment::energy_vs_power;
  std::string preset;
  std::vector<Scheme> schemes{Scheme::edge, Scheme::center, Scheme::diagonal};
  std::vector<HarvestKind> models{HarvestKind::linear, HarvestKind::logistic};
  ConfigInput base;
  PowerGrid power;
  std::size_t control_points = 101;  // region sweep: uniform grid on [0, 1]
  SweepMethods methods;
  McOptions mc;
  QuadratureOptions quadrature;

  /// Throws ConfigError listing every problem with the spec or its scenario.
  void validate() const;
};

/// Named scenario presets:
///   s1    d_x = d_y = 8 m             s2    d_x = 15 m, d_y = 8 m
///   c1    alpha = beta = 0.8          c2    alpha = beta = 0.6
///   fig4  d_x = d_y = 8 m, P_t = 0.3 W
/// applied on top of `base`. Throws std::invalid_argument for unknown names.
SweepSpec preset_spec(std::string_view preset, Experiment experiment, const ConfigInput& base = {});

/// One row of an energy or rate power sweep. model is empty for rate rows.
struct PowerRow {
  double pt_w;
  Scheme scheme;
  std::optional<HarvestKind> model;
  SweepMethod method;
  double value;
};

enum class Protocol { time_switching, power_splitting };
std::string_view to_string(Protocol p);  // "ts", "ps"

/// Time switching sweeps alpha with beta = 1; power splitting sweeps beta
/// with alpha = 1.
struct TradeoffPoint {
  Protocol protocol;
  double control;
  Scheme scheme;
  HarvestKind model;
  double energy_w;
  double rate_bits_s_hz;
};

/// Rows sorted by (scheme, model, method, P_t). A quadrature failure is
/// rethrown as QuadratureError naming the offending row.
std::vector<PowerRow> run_power_sweep(const SweepSpec& spec);

/// Points sorted by (scheme, model, protocol, control). Needs a transmit
/// power in spec.base. Energy is exact: closed form for the linear model,
/// quadrature for the logistic one.
std::vector<TradeoffPoint> run_tradeoff(const SweepSpec& spec);

struct SweepResult {
  Experiment experiment;
  std::vector<PowerRow> power_rows;
  std::vector<TradeoffPoint> region_points;
};

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace paswipt
