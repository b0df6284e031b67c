#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pwmkit/simulate.hpp"

namespace {

using namespace pwmkit;
using Catch::Matchers::WithinAbs;

const DriveConfig kDrive{};

CarrierConfig small_carrier(int f_ratio = 4, int samples = 16) {
  CarrierConfig carrier;
  carrier.f_ratio = f_ratio;
  carrier.samples_per_period = samples;
  return carrier;
}

TEST_CASE("carrier validation") {
  CHECK_NOTHROW(require_valid(CarrierConfig{}));

  CarrierConfig bad = small_carrier();
  bad.f_ratio = 2;
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);

  bad = small_carrier();
  bad.samples_per_period = 15;
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);

  bad = small_carrier();
  bad.samples_per_period = 8;
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);

  bad = small_carrier();
  bad.v_dc = 0.0;
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);

  bad = small_carrier();
  bad.timebase.dither_amplitude = -1.0;
  CHECK_THROWS_AS(require_valid(bad), std::invalid_argument);
}

TEST_CASE("synthesized waveform has the expected shape") {
  const CarrierConfig carrier = small_carrier();
  const SwitchedWaveform wf = synthesize(
      Technique::spwm, PolarCommand{0.5, 0.0}, kDrive, carrier, 2);

  CHECK(wf.t.size() == 4u * 16u * 2u);
  REQUIRE(wf.v_pg.size() == 3);
  CHECK(wf.v_pg[0].size() == wf.t.size());
  CHECK_THAT(wf.dt, WithinAbs(50e-6 / 16.0, 1e-18));
  CHECK_THAT(wf.t[0], WithinAbs(0.5 * wf.dt, 1e-18));
  CHECK_THAT(wf.fundamental_freq, WithinAbs(1.0 / (4.0 * 50e-6), 1e-9));
  CHECK(wf.cycles == 2);
  CHECK_FALSE(wf.dithered);
  CHECK_FALSE(wf.saturated);

  for (const auto& trace : wf.v_pg) {
    for (double v : trace) {
      CHECK((v == 0.0 || v == wf.v_dc));
    }
  }

  REQUIRE(wf.period_offset.size() == 8u + 1u);
  CHECK(wf.period_offset.front() == 0u);
  CHECK(wf.period_offset.back() == wf.t.size());
  for (std::size_t k = 0; k + 1 < wf.period_offset.size(); ++k) {
    CHECK(wf.period_offset[k + 1] - wf.period_offset[k] == 16u);
  }
  REQUIRE(wf.period_duty.size() == 8);
  CHECK(wf.period_duty[0].size() == 3);
}

TEST_CASE("degenerate duties produce exact rails") {
  // cpwm at m = 1, theta = 0 commands duties (1/2, 0, 1).
  const SwitchedWaveform wf = synthesize(
      Technique::cpwm, PolarCommand{1.0, 0.0}, kDrive, small_carrier(), 1);
  const int s = wf.samples_per_period;
  for (int i = 0; i < s; ++i) {
    CHECK(wf.v_pg[1][static_cast<std::size_t>(i)] == 0.0);
    CHECK(wf.v_pg[2][static_cast<std::size_t>(i)] == wf.v_dc);
  }
}

TEST_CASE("pulses are centre-aligned with width duty times period") {
  // spwm at theta = 0 gives phase one duty exactly 1/2: the middle half of
  // the period is on.
  const SwitchedWaveform wf = synthesize(
      Technique::spwm, PolarCommand{0.7, 0.0}, kDrive, small_carrier(), 1);
  const auto& trace = wf.v_pg[0];
  int on = 0;
  for (int i = 0; i < 16; ++i) {
    if (trace[static_cast<std::size_t>(i)] > 0.0) ++on;
  }
  CHECK(on == 8);
  for (int i = 4; i < 12; ++i) {
    CHECK(trace[static_cast<std::size_t>(i)] == wf.v_dc);
  }
  for (int i : {0, 1, 2, 3, 12, 13, 14, 15}) {
    CHECK(trace[static_cast<std::size_t>(i)] == 0.0);
  }
}

TEST_CASE("per-period on-counts track the commanded duty") {
  const CarrierConfig carrier = small_carrier(21, 64);
  const SwitchedWaveform wf = synthesize(
      Technique::spwm, PolarCommand{0.8, 0.0}, kDrive, carrier, 1);
  const int s = wf.samples_per_period;
  for (std::size_t k = 0; k < wf.period_duty.size(); ++k) {
    for (int r = 0; r < wf.n_phases; ++r) {
      int on = 0;
      for (std::size_t n = wf.period_offset[k]; n < wf.period_offset[k + 1];
           ++n) {
        if (wf.v_pg[static_cast<std::size_t>(r)][n] > 0.0) ++on;
      }
      const double want = wf.period_duty[k][static_cast<std::size_t>(r)] * s;
      CHECK(std::fabs(on - want) <= 1.0);
    }
  }
}

TEST_CASE("each phase switches at most twice per period") {
  const SwitchedWaveform wf = synthesize(
      Technique::dpwm, PolarCommand{0.8, 0.0}, kDrive, small_carrier(8, 32), 1);
  for (int r = 0; r < wf.n_phases; ++r) {
    const auto& trace = wf.v_pg[static_cast<std::size_t>(r)];
    for (std::size_t k = 0; k + 1 < wf.period_offset.size(); ++k) {
      int flips = 0;
      for (std::size_t n = wf.period_offset[k] + 1; n < wf.period_offset[k + 1];
           ++n) {
        if (trace[n] != trace[n - 1]) ++flips;
      }
      CHECK(flips <= 2);
    }
  }
}

TEST_CASE("period averages reconstruct the duty command") {
  for (Technique t : {Technique::spwm, Technique::cpwm}) {
    const SwitchedWaveform wf = synthesize(
        t, PolarCommand{0.8, 0.0}, kDrive, small_carrier(21, 128), 1);
    const auto means = period_averages(wf);
    REQUIRE(means.size() == wf.period_duty.size());
    for (std::size_t k = 0; k < means.size(); ++k) {
      for (int r = 0; r < wf.n_phases; ++r) {
        const double want =
            wf.period_duty[k][static_cast<std::size_t>(r)] * wf.v_dc;
        CHECK(std::fabs(means[k][static_cast<std::size_t>(r)] - want) <=
              wf.v_dc / wf.samples_per_period + 1e-12);
      }
    }
  }
}

TEST_CASE("line pair names walk the phases cyclically") {
  CHECK(line_pair_names(3) == std::vector<std::string>{"ab", "bc", "ca"});
  CHECK(line_pair_names(5) ==
        std::vector<std::string>{"ab", "bc", "cd", "de", "ea"});
}

TEST_CASE("line-to-line traces are three-level and sum to zero") {
  const SwitchedWaveform wf = synthesize(
      Technique::dpwm, PolarCommand{0.9, 0.0}, kDrive, small_carrier(8, 32), 1);
  const auto pairs = line_to_line(wf);
  REQUIRE(pairs.size() == 3);
  for (std::size_t n = 0; n < wf.t.size(); ++n) {
    double sum = 0.0;
    for (const auto& trace : pairs) {
      CHECK((trace[n] == 0.0 || trace[n] == wf.v_dc || trace[n] == -wf.v_dc));
      sum += trace[n];
    }
    CHECK(sum == 0.0);
  }
}

TEST_CASE("discontinuous modulation switches less than continuous") {
  const CarrierConfig carrier = small_carrier(16, 64);
  const PolarCommand polar{0.8, 0.0};
  const auto cont = switching_count(
      synthesize(Technique::cpwm, polar, kDrive, carrier, 1));
  const auto disc = switching_count(
      synthesize(Technique::dpwm, polar, kDrive, carrier, 1));
  double cont_total = 0.0, disc_total = 0.0;
  for (double c : cont) cont_total += c;
  for (double c : disc) disc_total += c;
  CHECK(cont_total > 0.0);
  CHECK(disc_total > 0.0);
  CHECK(disc_total < cont_total);
}

TEST_CASE("utilization approaches the analytic bus ratios") {
  CarrierConfig carrier;
  carrier.f_ratio = 21;
  carrier.samples_per_period = 1024;
  const PolarCommand polar{0.8, 0.0};

  const double spwm_u =
      utilization_report(Technique::spwm, polar, kDrive, carrier);
  const double dpwm_u =
      utilization_report(Technique::dpwm, polar, kDrive, carrier);

  CHECK(std::fabs(spwm_u - std::sqrt(3.0) / 2.0 * 0.8) <
        0.005 * (std::sqrt(3.0) / 2.0 * 0.8));
  CHECK(std::fabs(dpwm_u - 0.8) < 0.005 * 0.8);
  CHECK(std::fabs(dpwm_u / spwm_u - 2.0 / std::sqrt(3.0)) <
        0.005 * (2.0 / std::sqrt(3.0)));

  CHECK_THROWS_AS(
      utilization_report(Technique::spwm, PolarCommand{0.0, 0.0}, kDrive,
                         carrier),
      std::domain_error);
}

TEST_CASE("saturation is reported for overmodulated commands") {
  const SwitchedWaveform hot = synthesize(
      Technique::spwm, PolarCommand{1.2, 0.0}, kDrive, small_carrier(), 1);
  CHECK(hot.saturated);
  const SwitchedWaveform cool = synthesize(
      Technique::spwm, PolarCommand{0.8, 0.0}, kDrive, small_carrier(), 1);
  CHECK_FALSE(cool.saturated);
}

TEST_CASE("cycle count validation") {
  CHECK_THROWS_AS(
      synthesize(Technique::spwm, PolarCommand{0.5, 0.0}, kDrive,
                 small_carrier(), 0),
      std::invalid_argument);
}

TEST_CASE("dithered synthesis is deterministic per seed") {
  CarrierConfig carrier = small_carrier(6, 32);
  carrier.timebase.dither_amplitude = 7.5e-6;
  carrier.timebase.seed = 11;
  const PolarCommand polar{0.6, 0.0};

  const SwitchedWaveform a =
      synthesize(Technique::cpwm, polar, kDrive, carrier, 2);
  const SwitchedWaveform b =
      synthesize(Technique::cpwm, polar, kDrive, carrier, 2);
  CHECK(a.dithered);
  CHECK(a.t == b.t);
  CHECK(a.v_pg == b.v_pg);
  CHECK(a.period_duration == b.period_duration);

  carrier.timebase.seed = 12;
  const SwitchedWaveform c =
      synthesize(Technique::cpwm, polar, kDrive, carrier, 2);
  CHECK(a.v_pg != c.v_pg);
}

TEST_CASE("dithered periods respect the band and keep the uniform grid") {
  CarrierConfig carrier = small_carrier(8, 64);
  carrier.timebase.dither_amplitude = 5e-6;
  carrier.timebase.seed = 3;
  const SwitchedWaveform wf =
      synthesize(Technique::spwm, PolarCommand{0.7, 0.0}, kDrive, carrier, 1);

  REQUIRE(wf.period_duration.size() == 8);
  for (double dur : wf.period_duration) {
    CHECK(dur >= 50e-6 - 5e-6);
    CHECK(dur <= 50e-6 + 5e-6);
  }
  CHECK(wf.period_duration == dithered_periods(carrier.timebase, 8));

  for (std::size_t n = 1; n < wf.t.size(); ++n) {
    CHECK_THAT(wf.t[n] - wf.t[n - 1], WithinAbs(wf.dt, 1e-15));
  }

  const auto means = period_averages(wf);
  for (std::size_t k = 0; k < means.size(); ++k) {
    for (int r = 0; r < wf.n_phases; ++r) {
      const double want =
          wf.period_duty[k][static_cast<std::size_t>(r)] * wf.v_dc;
      CHECK(std::fabs(means[k][static_cast<std::size_t>(r)] - want) <
            4.0 * wf.v_dc / wf.samples_per_period);
    }
  }
}

}  // namespace
