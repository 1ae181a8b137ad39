#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include "paswipt/config.hpp"
#include "paswipt/config_io.hpp"
#include "paswipt/units.hpp"
#include "reference_values.hpp"

using namespace paswipt;

namespace {

bool names(const std::vector<FieldError>& errs, const std::string& field) {
  return std::any_of(errs.begin(), errs.end(), [&](const FieldError& e) { return e.field == field; });
}

ConfigInput defaults_with_power() {
  ConfigInput in;
  in.transmit_power_w = 0.3;
  return in;
}

}  // namespace

TEST_CASE("dbm_to_watts") {
  CHECK(dbm_to_watts(-90.0) == doctest::Approx(1e-12).epsilon(1e-15));
  CHECK(dbm_to_watts(30.0) == 1.0);
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-15));
}

TEST_CASE("dBm round trip over [-120, 60]") {
  for (double x = -120.0; x <= 60.0; x += 0.37) CHECK(std::abs(watts_to_dbm(dbm_to_watts(x)) - x) < 1e-12);
}

TEST_CASE("derive_mu") {
  CHECK(derive_mu(28e9) == doctest::Approx(reference::kMu28GHz).epsilon(1e-14));
  CHECK(derive_mu(kSpeedOfLight / (4.0 * std::numbers::pi)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(derive_mu(56e9) == doctest::Approx(derive_mu(28e9) / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(derive_mu(0.0), std::invalid_argument);
  CHECK_THROWS_AS(derive_mu(-1.0), std::invalid_argument);
}

TEST_CASE("derived system constants") {
  const auto s = SystemParams::make(28e9, 1e-12, 0.3);
  const double lambda = kSpeedOfLight / 28e9;
  CHECK(s.wavelength_m == doctest::Approx(lambda));
  const double expected_mu = std::pow(lambda / (4.0 * std::numbers::pi), 2);
  CHECK(std::abs(s.mu_m2 - expected_mu) / expected_mu < 1e-12);
  CHECK(s.transmit_snr == doctest::Approx(3e11));
  CHECK(s.wavenumber_per_m == doctest::Approx(2.0 * std::numbers::pi / lambda));
  CHECK(s.mu_snr_m2() == doctest::Approx(reference::kMuSnrAt0p3W).epsilon(1e-13));
}

TEST_CASE("region geometry derived constants") {
  const auto g = RegionGeometry::make(15.0, 10.0, 3.0);
  CHECK(g.aspect_k == doctest::Approx(10.0 / 15.0));
  CHECK(g.diagonal_halfwidth_m == doctest::Approx(150.0 / std::sqrt(325.0)));
  CHECK(g.diagonal_halfwidth_m > 0.0);
  CHECK(g.diagonal_halfwidth_m <= std::min(g.d_x_m, g.d_y_m));
}

TEST_CASE("logistic offset stays finite at the default a*b = 290") {
  const auto nlm = LogisticHarvest::make(20e-3, 100e6, 2.9e-6);
  CHECK(nlm.omega >= 0.0);
  CHECK(nlm.omega <= 1e-100);
  CHECK(nlm.omega == doctest::Approx(reference::kOmega).epsilon(1e-12));
  // far past the double range of e^{ab}: underflows to zero without error
  CHECK(logistic_offset(1e8, 1e-3) == 0.0);
  CHECK(logistic_offset(1.0, 1.0) == doctest::Approx(1.0 / (1.0 + std::exp(1.0))));
}

TEST_CASE("validate accepts the default scenario") {
  const auto r = validate(defaults_with_power());
  REQUIRE(r.ok());
  CHECK(r.errors.empty());
  CHECK(r.config->logistic.a_per_w == 1e8);
  CHECK(r.config->logistic.b_w == doctest::Approx(2.9e-6));
  CHECK(r.config->system.noise_power_w == doctest::Approx(1e-12));
}

TEST_CASE("validate names each bad field and reports all of them") {
  auto in = defaults_with_power();
  in.alpha = 1.2;
  auto r = validate(in);
  CHECK_FALSE(r.ok());
  CHECK(names(r.errors, "alpha"));

  in = defaults_with_power();
  in.d_y_m = 0.0;
  r = validate(in);
  CHECK(names(r.errors, "d_y"));

  in = ConfigInput{};
  in.alpha = -0.1;
  in.beta = 2.0;
  in.height_m = -3.0;
  in.eta = 0.0;
  in.b_w = std::nan("");
  r = validate(in);
  CHECK(r.errors.size() == 6);
  for (const char* f : {"alpha", "beta", "height", "eta", "b_w", "transmit_power_w"}) CHECK(names(r.errors, f));
  CHECK_THROWS_AS(validate_or_throw(in), ConfigError);
}

TEST_CASE("validation is a pure function of the input") {
  const auto a = validate_or_throw(defaults_with_power());
  const auto b = validate_or_throw(defaults_with_power());
  CHECK(std::memcmp(&a.system, &b.system, sizeof a.system) == 0);
  CHECK(std::memcmp(&a.geometry, &b.geometry, sizeof a.geometry) == 0);
  CHECK(std::memcmp(&a.logistic, &b.logistic, sizeof a.logistic) == 0);
}

TEST_CASE("protocol and power overrides revalidate") {
  const auto c = validate_or_throw(defaults_with_power());
  CHECK_THROWS_AS(c.with_protocol(0.5, 1.5), ConfigError);
  CHECK_THROWS_AS(c.with_transmit_power(0.0), ConfigError);
  CHECK(c.with_transmit_power(0.6).system.transmit_snr == doctest::Approx(2.0 * c.system.transmit_snr));
  CHECK(c.with_protocol(0.5, 0.5).protocol.decoding_fraction() == 0.75);
}

TEST_CASE("config file: unit-suffixed keys convert to SI") {
  const auto doc = nlohmann::json::parse(R"({
    "system": {"carrier_frequency_ghz": 28, "noise_power_dbm": -90, "transmit_power_w": 0.3},
    "protocol": {"alpha": 0.6, "beta": 0.6},
    "geometry": {"d_x_m": 8, "d_y_m": 8, "height_m": 3},
    "harvest": {"eta": 0.5, "phi_mw": 20, "a_per_uw": 100, "b_uw": 2.9}
  })");
  const auto in = config_input_from_json(doc);
  CHECK(in.carrier_frequency_hz == 28e9);
  CHECK(in.noise_power_w == doctest::Approx(1e-12));
  CHECK(*in.transmit_power_w == 0.3);
  CHECK(in.alpha == 0.6);
  CHECK(in.d_x_m == 8.0);
  CHECK(in.phi_w == doctest::Approx(0.02));
  CHECK(in.a_per_w == doctest::Approx(1e8));
  CHECK(in.b_w == doctest::Approx(2.9e-6));
  CHECK(in.eta == 0.5);

  const auto back = config_input_from_json(config_input_to_json(in));
  CHECK(back.a_per_w == doctest::Approx(in.a_per_w));
  CHECK(back.noise_power_w == doctest::Approx(in.noise_power_w));
}

TEST_CASE("config file: unknown and malformed keys are all reported") {
  const auto doc = nlohmann::json::parse(R"({
    "system": {"carrier_frequency_hz": 28e9},
    "protocol": {"alpha": "high"},
    "antenna": {}
  })");
  try {
    config_input_from_json(doc);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.errors().size() == 3);
    CHECK(names(e.errors(), "system.carrier_frequency_hz"));
    CHECK(names(e.errors(), "protocol.alpha"));
    CHECK(names(e.errors(), "antenna"));
  }
}

TEST_CASE("config file: structural and range errors come back together") {
  const auto doc = nlohmann::json::parse(R"({
    "protocol": {"alpha": 1.5},
    "geometry": {"height_m": -1},
    "bogus": 1
  })");
  try {
    config_input_from_json(doc);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.errors().size() == 3);
    CHECK(names(e.errors(), "bogus"));
    CHECK(names(e.errors(), "alpha"));
    CHECK(names(e.errors(), "height"));
  }
}
