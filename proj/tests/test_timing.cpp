#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pwmkit/timing.hpp"

namespace {

using namespace pwmkit;
using Catch::Matchers::WithinAbs;

DutyVector make_vector(std::vector<double> duties) {
  return DutyVector{std::move(duties), Technique::spwm, 0.5, 0.0};
}

TEST_CASE("duty_to_times splits the period proportionally") {
  const double t_p = 50e-6;
  const SwitchTiming timing =
      duty_to_times(make_vector({0.25, 0.5, 1.0}), t_p);
  REQUIRE(timing.t_on.size() == 3);
  CHECK_THAT(timing.t_on[0], WithinAbs(12.5e-6, 1e-18));
  CHECK_THAT(timing.t_on[1], WithinAbs(25e-6, 1e-18));
  CHECK(timing.t_on[2] == t_p);
  CHECK(timing.t_off[2] == 0.0);
  CHECK(timing.t_p == t_p);
  CHECK_FALSE(timing.saturated);
}

TEST_CASE("on and off durations always reconstruct the period exactly") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (double t_p : {50e-6, 1e-3, 1.0 / 3.0}) {
    for (int i = 0; i < 10000; ++i) {
      const double d = uniform(rng);
      const SwitchTiming timing = duty_to_times(make_vector({d}), t_p);
      CHECK(timing.t_on[0] + timing.t_off[0] == t_p);
      CHECK(timing.t_on[0] >= 0.0);
      CHECK(timing.t_on[0] <= t_p);
      CHECK_THAT(timing.t_on[0] / t_p, WithinAbs(d, 1e-12));
    }
  }
}

TEST_CASE("degenerate duties give exact rails") {
  const double t_p = 125e-6;
  const SwitchTiming timing = duty_to_times(make_vector({0.0, 1.0}), t_p);
  CHECK(timing.t_on[0] == 0.0);
  CHECK(timing.t_off[0] == t_p);
  CHECK(timing.t_on[1] == t_p);
  CHECK(timing.t_off[1] == 0.0);
  CHECK_FALSE(timing.saturated);
}

TEST_CASE("out-of-range duties clamp and flag saturation") {
  const double t_p = 50e-6;
  const SwitchTiming low = duty_to_times(make_vector({-0.1}), t_p);
  CHECK(low.t_on[0] == 0.0);
  CHECK(low.saturated);

  const SwitchTiming high = duty_to_times(make_vector({1.2}), t_p);
  CHECK(high.t_on[0] == t_p);
  CHECK(high.saturated);

  const SwitchTiming fine = duty_to_times(make_vector({0.3}), t_p);
  CHECK_FALSE(fine.saturated);
}

TEST_CASE("duty_to_times rejects non-positive periods") {
  CHECK_THROWS_AS(duty_to_times(make_vector({0.5}), 0.0), std::domain_error);
  CHECK_THROWS_AS(duty_to_times(make_vector({0.5}), -1e-6), std::domain_error);
}

TEST_CASE("timebase validation") {
  TimebaseConfig tb;
  CHECK_NOTHROW(require_valid(tb));

  tb.t_p_nominal = 0.0;
  CHECK_THROWS_AS(require_valid(tb), std::invalid_argument);

  tb = TimebaseConfig{};
  tb.dither_amplitude = -1e-9;
  CHECK_THROWS_AS(require_valid(tb), std::invalid_argument);

  tb = TimebaseConfig{};
  tb.dither_amplitude = tb.t_p_nominal;
  CHECK_THROWS_AS(require_valid(tb), std::invalid_argument);

  tb = TimebaseConfig{};
  tb.dither_amplitude = 0.5 * tb.t_p_nominal;
  CHECK_NOTHROW(require_valid(tb));
}

TEST_CASE("dither stream is deterministic per seed") {
  TimebaseConfig tb;
  tb.dither_amplitude = 7.5e-6;
  tb.seed = 12345;

  const auto a = dithered_periods(tb, 100);
  const auto b = dithered_periods(tb, 100);
  CHECK(a == b);

  tb.seed = 54321;
  const auto c = dithered_periods(tb, 100);
  CHECK(a != c);
}

TEST_CASE("dithered periods stay inside the commanded band") {
  TimebaseConfig tb;
  tb.t_p_nominal = 50e-6;
  tb.dither_amplitude = 7.5e-6;
  tb.seed = 7;
  const auto periods = dithered_periods(tb, 10000);
  double sum = 0.0;
  for (double p : periods) {
    CHECK(p >= tb.t_p_nominal - tb.dither_amplitude);
    CHECK(p <= tb.t_p_nominal + tb.dither_amplitude);
    sum += p;
  }
  const double mean = sum / static_cast<double>(periods.size());
  CHECK(std::fabs(mean - tb.t_p_nominal) < 0.01 * tb.t_p_nominal);
}

TEST_CASE("zero amplitude reproduces the nominal period exactly") {
  TimebaseConfig tb;
  const auto periods = dithered_periods(tb, 32);
  for (double p : periods) CHECK(p == tb.t_p_nominal);
}

TEST_CASE("generator and batch helper agree") {
  TimebaseConfig tb;
  tb.dither_amplitude = 5e-6;
  tb.seed = 99;
  PeriodDither gen(tb);
  const auto batch = dithered_periods(tb, 16);
  for (double expected : batch) CHECK(gen.next() == expected);
}

}  // namespace
