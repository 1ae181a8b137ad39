#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "paswipt/distance_law.hpp"
#include "paswipt/quadrature.hpp"
#include "paswipt/rate.hpp"
#include "reference_values.hpp"
#include "scenario.hpp"

using namespace paswipt;
using testing::default_config;
using testing::rel_diff;

TEST_CASE("snr") {
  const auto c = default_config(0.3);
  CHECK(snr(c.system, SquaredDistance(c.system.mu_snr_m2())) == doctest::Approx(1.0));
  const auto noisier = SystemParams::make(28e9, 2e-12, 0.3);
  CHECK(snr(noisier, SquaredDistance(9.0)) == doctest::Approx(snr(c.system, SquaredDistance(9.0)) / 2.0));
  CHECK(snr(c.system, SquaredDistance(9.0)) == doctest::Approx(reference::kMuSnrAt0p3W / 9.0).epsilon(1e-13));
}

TEST_CASE("closed forms at the default scenario") {
  const auto c = default_config(0.3);
  const double expected[] = {reference::kRateEdge, reference::kRateCenter, reference::kRateDiagonal};
  for (Scheme s : kAllSchemes) {
    const auto r = avg_rate_closed({s, c.geometry}, c.system, c.protocol);
    CHECK(r.method == RateMethod::closed_form);
    CHECK(rel_diff(r.value_bits_per_s_per_hz, expected[static_cast<int>(s)]) < 1e-12);
  }
  CHECK(avg_rate_closed({Scheme::edge, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz ==
        doctest::Approx(4.59).epsilon(1e-3));
}

TEST_CASE("zero SNR gives zero rate") {
  const double h = 3.0;
  CHECK(std::abs(rate_kernels::offset_log_integral(10.0, h, 0.0)) < 1e-12);
  CHECK(std::abs(rate_kernels::diagonal_i1(8.3, h, 0.0)) < 1e-12);
  CHECK(std::abs(rate_kernels::diagonal_i2(8.3, h, 0.0)) < 1e-12);
}

TEST_CASE("all resources to harvesting gives zero rate") {
  const auto c = default_config(0.3).with_protocol(1.0, 1.0);
  for (Scheme s : kAllSchemes) {
    CHECK(avg_rate_closed({s, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz == 0.0);
    CHECK(avg_rate_quadrature({s, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz == 0.0);
  }
}

TEST_CASE("edge/center formula rejects the diagonal") {
  const auto c = default_config();
  CHECK_THROWS_AS(avg_rate_edge_center_closed({Scheme::diagonal, c.geometry}, c.system, c.protocol),
                  std::invalid_argument);
}

TEST_CASE("integration-by-parts kernel matches direct quadrature") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> span(1.0, 20.0), h(1.0, 5.0), m(0.0, 1e6);
  for (int i = 0; i < 100; ++i) {
    const double sp = span(rng), hh = h(rng), mm = m(rng);
    const double direct =
        integrate([&](double t) { return std::log1p(mm / (hh * hh + t * t)); }, 0.0, sp, {1e-12, 30});
    CHECK(rel_diff(rate_kernels::offset_log_integral(sp, hh, mm), direct) < 1e-9);
  }
}

TEST_CASE("diagonal kernels match direct quadrature") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> lam(1.0, 15.0), h(1.0, 5.0), m(1.0, 1e6);
  for (int i = 0; i < 100; ++i) {
    const double L = lam(rng), hh = h(rng), mm = m(rng);
    const double lo = hh * hh, hi = hh * hh + L * L;
    const double i2 = integrate([&](double l) { return std::log1p(mm / l); }, lo, hi, {1e-12, 30});
    CHECK(rel_diff(rate_kernels::diagonal_i2(L, hh, mm), i2) < 1e-9);
    // I1 over l has a 1/sqrt singularity at h^2; substitute l = h^2 + t^2
    const double i1 =
        integrate([&](double t) { return 2.0 * std::log1p(mm / (lo + t * t)); }, 0.0, L, {1e-12, 30});
    CHECK(rel_diff(rate_kernels::diagonal_i1(L, hh, mm), i1) < 1e-9);
  }
}

TEST_CASE("closed forms agree with quadrature on random scenarios") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto c = testing::random_config(rng);
    for (Scheme s : kAllSchemes) {
      const DeploymentScheme d{s, c.geometry};
      const double closed = avg_rate_closed(d, c.system, c.protocol).value_bits_per_s_per_hz;
      const double quad = avg_rate_quadrature(d, c.system, c.protocol).value_bits_per_s_per_hz;
      CHECK(rel_diff(closed, quad) < 1e-8);
    }
  }
}

TEST_CASE("protocol enters only through 1 - alpha beta") {
  const auto c = default_config(0.3);
  for (Scheme s : kAllSchemes) {
    const DeploymentScheme d{s, c.geometry};
    const double r55 = avg_rate_closed(d, c.system, ProtocolParams::make(0.5, 0.5)).value_bits_per_s_per_hz;
    const double r88 = avg_rate_closed(d, c.system, ProtocolParams::make(0.8, 0.8)).value_bits_per_s_per_hz;
    CHECK(std::abs(r55 / r88 - (1.0 - 0.25) / (1.0 - 0.64)) < 1e-12);
  }
}

TEST_CASE("center rate at least edge rate") {
  for (double pt : {0.01, 0.1, 0.3, 1.0})
    for (double dy : {4.0, 10.0, 20.0}) {
      ConfigInput in;
      in.transmit_power_w = pt;
      in.d_y_m = dy;
      const auto c = validate_or_throw(in);
      CHECK(avg_rate_closed({Scheme::center, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz >=
            avg_rate_closed({Scheme::edge, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz);
    }
}

TEST_CASE("rate monotone in height and power") {
  for (Scheme s : kAllSchemes) {
    double prev = INFINITY;
    for (double h = 1.0; h <= 10.0; h += 0.5) {
      ConfigInput in;
      in.transmit_power_w = 0.3;
      in.height_m = h;
      const auto c = validate_or_throw(in);
      const double r = avg_rate_quadrature({s, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz;
      CHECK(r <= prev);
      prev = r;
    }
    const auto base = default_config();
    prev = 0.0;
    for (int k = 0; k < 20; ++k) {
      const auto c = base.with_transmit_power(0.01 * std::pow(100.0, k / 19.0));
      const double r = avg_rate_closed({s, c.geometry}, c.system, c.protocol).value_bits_per_s_per_hz;
      CHECK(r > prev);
      prev = r;
    }
  }
}
