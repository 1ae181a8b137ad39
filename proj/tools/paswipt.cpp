// paswipt: closed-form, quadrature and Monte-Carlo evaluation of average
// harvested energy and achievable rate for a pinching-antenna SWIPT link.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paswipt/config_io.hpp"
#include "paswipt/csv.hpp"
#include "paswipt/distance_law.hpp"
#include "paswipt/energy.hpp"
#include "paswipt/montecarlo.hpp"
#include "paswipt/rate.hpp"
#include "paswipt/sweep.hpp"

namespace {

using namespace paswipt;

struct CommonArgs {
  std::string config_path;
  std::optional<double> pt_w;
};

struct McArgs {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 0;

  McOptions options() const { return {samples, seed, workers}; }
};

void add_config_flag(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file (see README for the schema)")
      ->check(CLI::ExistingFile);
}

void add_mc_flags(CLI::App* cmd, McArgs& mc) {
  cmd->add_option("--samples", mc.samples, "Monte-Carlo sample count")->check(CLI::Range(2ULL, 1ULL << 40));
  cmd->add_option("--seed", mc.seed, "Monte-Carlo seed");
  cmd->add_option("--workers", mc.workers, "OpenMP worker threads (0 = default)")->check(CLI::NonNegativeNumber);
}

ConfigInput load_input(const CommonArgs& args) {
  ConfigInput in = args.config_path.empty() ? ConfigInput{} : load_config_input(args.config_path);
  if (args.pt_w) in.transmit_power_w = *args.pt_w;
  return in;
}

std::string cell(std::optional<double> v) { return v ? format_number(*v) : std::string(); }

int run_validate(const CommonArgs& args) {
  ConfigInput in = load_input(args);
  if (!in.transmit_power_w) in.transmit_power_w = 1.0;  // P_t is per-command; only check the rest
  const Config c = validate_or_throw(in);
  std::cout << "configuration ok\n"
            << "wavelength_m," << format_number(c.system.wavelength_m) << '\n'
            << "mu_m2," << format_number(c.system.mu_m2) << '\n'
            << "aspect_k," << format_number(c.geometry.aspect_k) << '\n'
            << "diagonal_halfwidth_m," << format_number(c.geometry.diagonal_halfwidth_m) << '\n'
            << "logistic_omega," << format_number(c.logistic.omega) << '\n';
  return 0;
}

int run_dist(const CommonArgs& args, const std::string& scheme, const std::string& out_path,
             std::size_t points) {
  ConfigInput in = load_input(args);
  if (!in.transmit_power_w) in.transmit_power_w = 1.0;  // the distance law does not depend on P_t
  const Config c = validate_or_throw(in);
  const SquaredDistanceLaw law(parse_scheme(scheme), c.geometry);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  write_distribution_csv(out, law, points);
  if (!out) throw std::runtime_error("write to " + out_path + " failed");
  return 0;
}

int run_energy(const CommonArgs& args, const std::string& scheme_name, const std::string& model_name,
               bool with_mc, const McArgs& mc) {
  const Config c = validate_or_throw(load_input(args));
  const DeploymentScheme d{parse_scheme(scheme_name), c.geometry};
  std::optional<double> closed, bound, quad, mc_mean, mc_se;
  Metric metric;
  if (model_name == "lm") {
    closed = avg_energy_lm_closed(d, c.system, c.protocol, c.linear).value_w;
    quad = avg_energy_quadrature(d, c.system, c.protocol, c.linear).value_w;
    metric = Metric::energy_lm;
  } else if (model_name == "nlm") {
    bound = avg_energy_nlm_bound(d, c.system, c.protocol, c.logistic).value_w;
    quad = avg_energy_quadrature(d, c.system, c.protocol, c.logistic).value_w;
    metric = Metric::energy_nlm;
  } else {
    throw std::invalid_argument("unknown model '" + model_name + "' (expected lm or nlm)");
  }
  if (with_mc) {
    const auto e = estimate(metric, d, c, mc.options());
    mc_mean = e.mean;
    mc_se = e.std_error;
  }
  std::cout << "scheme,model,pt_w,closed_w,bound_w,quad_w,mc_mean_w,mc_std_error_w\n"
            << to_string(d.kind) << ',' << model_name << ',' << format_number(c.system.transmit_power_w)
            << ',' << cell(closed) << ',' << cell(bound) << ',' << cell(quad) << ',' << cell(mc_mean) << ','
            << cell(mc_se) << '\n';
  return 0;
}

int run_rate(const CommonArgs& args, const std::string& scheme_name, std::vector<std::string> methods,
             const McArgs& mc) {
  const Config c = validate_or_throw(load_input(args));
  const DeploymentScheme d{parse_scheme(scheme_name), c.geometry};
  if (methods.empty()) methods = {"closed", "quad"};
  std::optional<double> closed, quad, mc_mean, mc_se;
  for (const auto& m : methods) {
    if (m == "closed") {
      closed = avg_rate_closed(d, c.system, c.protocol).value_bits_per_s_per_hz;
    } else if (m == "quad") {
      quad = avg_rate_quadrature(d, c.system, c.protocol).value_bits_per_s_per_hz;
    } else {
      const auto e = estimate(Metric::rate, d, c, mc.options());
      mc_mean = e.mean;
      mc_se = e.std_error;
    }
  }
  std::cout << "scheme,pt_w,closed,quad,mc_mean,mc_std_error\n"
            << to_string(d.kind) << ',' << format_number(c.system.transmit_power_w) << ',' << cell(closed)
            << ',' << cell(quad) << ',' << cell(mc_mean) << ',' << cell(mc_se) << '\n';
  return 0;
}

struct SweepArgs {
  std::string experiment;
  std::string preset;
  std::string out_dir;
  bool mc = false;
  bool no_plot = false;
  std::size_t points = 50;
  std::size_t control_points = 101;
  double pt_min = 0.01;
  double pt_max = 1.0;
};

int run_sweep_cmd(const CommonArgs& args, const SweepArgs& sa, const McArgs& mc) {
  ConfigInput base = args.config_path.empty() ? ConfigInput{} : load_config_input(args.config_path);
  SweepSpec spec = preset_spec(sa.preset, parse_experiment(sa.experiment), base);
  if (args.pt_w) spec.base.transmit_power_w = *args.pt_w;
  spec.power.points = sa.points;
  spec.power.min_w = sa.pt_min;
  spec.power.max_w = sa.pt_max;
  spec.control_points = sa.control_points;
  spec.methods.monte_carlo = sa.mc;
  spec.mc = mc.options();

  const auto result = run_sweep(spec);
  for (const auto& p : emit_outputs(result, {sa.out_dir, !sa.no_plot})) std::cout << p.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna SWIPT analysis: closed forms, quadrature and Monte-Carlo"};
  app.require_subcommand(1);

  CommonArgs common;
  McArgs mc;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a configuration and print derived constants");
  add_config_flag(validate_cmd, common);

  std::string scheme;
  auto* dist_cmd = app.add_subcommand("dist", "Emit CDF/PDF of the optimal squared distance");
  std::string cdf_out;
  std::size_t dist_points = 1000;
  add_config_flag(dist_cmd, common);
  dist_cmd->add_option("--scheme", scheme, "eds, cds or dds")->required();
  dist_cmd->add_option("--emit-cdf", cdf_out, "output CSV path (l_m2,cdf,pdf_per_m2)")->required();
  dist_cmd->add_option("--points", dist_points, "grid size")->check(CLI::PositiveNumber);

  auto* energy_cmd = app.add_subcommand("energy", "Average harvested energy for one scheme");
  std::string model = "lm";
  bool energy_mc = false;
  add_config_flag(energy_cmd, common);
  energy_cmd->add_option("--scheme", scheme, "eds, cds or dds")->required();
  energy_cmd->add_option("--model", model, "lm or nlm")->check(CLI::IsMember({"lm", "nlm"}));
  energy_cmd->add_option("--pt-w", common.pt_w, "transmit power in W")->required();
  energy_cmd->add_flag("--mc", energy_mc, "add a Monte-Carlo cross-check");
  add_mc_flags(energy_cmd, mc);

  auto* rate_cmd = app.add_subcommand("rate", "Average achievable rate for one scheme");
  std::vector<std::string> methods;
  add_config_flag(rate_cmd, common);
  rate_cmd->add_option("--scheme", scheme, "eds, cds or dds")->required();
  rate_cmd->add_option("--pt-w", common.pt_w, "transmit power in W")->required();
  rate_cmd->add_option("--method", methods, "closed, quad and/or mc (repeatable; default closed quad)")
      ->check(CLI::IsMember({"closed", "quad", "mc"}));
  add_mc_flags(rate_cmd, mc);

  auto* sweep_cmd = app.add_subcommand("sweep", "Reproduce the power sweeps and the energy-rate region");
  SweepArgs sa;
  add_config_flag(sweep_cmd, common);
  sweep_cmd->add_option("--experiment", sa.experiment, "energy, rate or region")
      ->required()
      ->check(CLI::IsMember({"energy", "rate", "region"}));
  sweep_cmd->add_option("--preset", sa.preset, "s1, s2, c1, c2 or fig4")
      ->required()
      ->check(CLI::IsMember({"s1", "s2", "c1", "c2", "fig4"}));
  sweep_cmd->add_option("--out", sa.out_dir, "output directory")->required();
  sweep_cmd->add_option("--pt-w", common.pt_w, "fixed transmit power for the region sweep");
  sweep_cmd->add_option("--points", sa.points, "power grid points (log-spaced)");
  sweep_cmd->add_option("--pt-min", sa.pt_min, "lowest transmit power in W");
  sweep_cmd->add_option("--pt-max", sa.pt_max, "highest transmit power in W");
  sweep_cmd->add_option("--control-points", sa.control_points, "region sweep grid points on [0, 1]");
  sweep_cmd->add_flag("--mc", sa.mc, "add Monte-Carlo rows");
  sweep_cmd->add_flag("--no-plot", sa.no_plot, "skip the plot script");
  add_mc_flags(sweep_cmd, mc);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return run_validate(common);
    if (*dist_cmd) return run_dist(common, scheme, cdf_out, dist_points);
    if (*energy_cmd) return run_energy(common, scheme, model, energy_mc, mc);
    if (*rate_cmd) return run_rate(common, scheme, methods, mc);
    if (*sweep_cmd) return run_sweep_cmd(common, sa, mc);
  } catch (const ConfigError& e) {
    std::cerr << "paswipt: invalid configuration\n";
    for (const auto& f : e.errors()) std::cerr << "  " << f.field << ": " << f.message << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "paswipt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
