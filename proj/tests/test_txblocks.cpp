#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "chainlab/errors.hpp"
#include "chainlab/rfcore.hpp"
#include "chainlab/txblocks.hpp"

using namespace chainlab;

namespace {

// Single-bin DFT amplitude probe (f must sit on a bin for exact readings).
double tone_amp(const TimeSeries& ts, double f) {
  const std::size_t n = ts.samples.size();
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = two_pi * f * static_cast<double>(i) / ts.sample_rate_hz;
    re += ts.samples[i] * std::cos(ph);
    im -= ts.samples[i] * std::sin(ph);
  }
  return 2.0 * std::hypot(re, im) / static_cast<double>(n);
}

}  // namespace

TEST_CASE("rectangular pulse geometry") {
  PulseShaperConfig cfg{5e-9, 0.25, 400e6, 3};
  const double fs = 16e9;
  const TimeSeries ts = rect_pulse(cfg, fs);
  // default record spans 10 pulse widths
  CHECK(ts.samples.size() == static_cast<std::size_t>(std::llround(10.0 * 5e-9 * fs)));
  const std::size_t spw = static_cast<std::size_t>(std::llround(5e-9 * fs));
  for (std::size_t i = 0; i < spw; ++i) CHECK(ts.samples[i] == 0.0);
  for (std::size_t i = spw; i < 2 * spw; ++i) CHECK(ts.samples[i] == 0.25);
  for (std::size_t i = 2 * spw; i < ts.samples.size(); ++i)
    CHECK(ts.samples[i] == 0.0);

  // explicit record length honored
  CHECK(rect_pulse(cfg, fs, 4096).samples.size() == 4096);
  // too coarse a rate cannot represent the pulse
  CHECK_THROWS_AS(rect_pulse(cfg, 1e9), std::domain_error);
  // record shorter than lead-in plus pulse
  CHECK_THROWS_AS(rect_pulse(cfg, fs, 100), std::domain_error);
}

TEST_CASE("pulse shaper config validation") {
  CHECK_NOTHROW(validate(PulseShaperConfig{5e-9, 0.25, 400e6, 3}));
  CHECK_THROWS_AS(validate(PulseShaperConfig{0.0, 0.25, 400e6, 3}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PulseShaperConfig{5e-9, 0.0, 400e6, 3}),
                  std::domain_error);
  CHECK_THROWS_AS(validate(PulseShaperConfig{5e-9, 0.25, 400e6, 0}),
                  std::domain_error);
  // infinite corner (bypass) is legal
  CHECK_NOTHROW(validate(
      PulseShaperConfig{5e-9, 0.25, std::numeric_limits<double>::infinity(), 3}));
}

TEST_CASE("shaper preserves DC and can be bypassed") {
  PulseShaperConfig cfg{5e-9, 0.25, 400e6, 3};
  const double fs = 16e9;
  // long record so the response fully settles back to zero
  const TimeSeries in = rect_pulse(cfg, fs, 8192);
  const TimeSeries out = shape_pulse(cfg, in);
  REQUIRE(out.samples.size() == in.samples.size());
  const double sum_in =
      std::accumulate(in.samples.begin(), in.samples.end(), 0.0);
  const double sum_out =
      std::accumulate(out.samples.begin(), out.samples.end(), 0.0);
  CHECK(sum_out == doctest::Approx(sum_in).epsilon(1e-6));
  // shaping never overshoots a monotone low-pass cascade
  for (double v : out.samples) {
    CHECK(v >= -1e-12);
    CHECK(v <= 0.25 + 1e-12);
  }

  PulseShaperConfig open = cfg;
  open.corner_hz = std::numeric_limits<double>::infinity();
  const TimeSeries same = shape_pulse(open, in);
  for (std::size_t i = 0; i < in.samples.size(); ++i)
    CHECK(same.samples[i] == in.samples[i]);

  CHECK_THROWS_AS(shape_pulse(cfg, rect_pulse(cfg, 16e8, 0)),
                  std::domain_error);  // fs < 20x corner
}

TEST_CASE("rise time: measured matches the gamma-CDF model") {
  const double fs = 64e9;  // fine grid so crossing interpolation is clean
  for (int stages : {1, 2, 3, 5}) {
    PulseShaperConfig cfg{20e-9, 1.0, 200e6, stages};
    const TimeSeries out = shape_pulse(cfg, rect_pulse(cfg, fs, 0));
    CHECK(measured_rise_time_s(out) ==
          doctest::Approx(shaper_rise_time_s(cfg)).epsilon(2e-3));
  }
}

TEST_CASE("rise time scaling laws") {
  PulseShaperConfig one{5e-9, 1.0, 400e6, 1};
  PulseShaperConfig three{5e-9, 1.0, 400e6, 3};
  const double tau = 1.0 / (two_pi * 400e6);
  // single pole: t_r = tau * ln 9
  CHECK(shaper_rise_time_s(one) ==
        doctest::Approx(tau * std::log(9.0)).epsilon(1e-9));
  // three identical poles: 10%/90% crossings of P(3, x) give 4.220255 tau,
  // i.e. 1.9207208x the single stage
  CHECK(shaper_rise_time_s(three) / tau ==
        doctest::Approx(4.2202550096).epsilon(1e-8));
  CHECK(shaper_rise_time_s(three) / shaper_rise_time_s(one) ==
        doctest::Approx(1.9207208280).epsilon(1e-8));
}

TEST_CASE("lo model strings") {
  CHECK(lo_model_from_string("ideal_sine") == LoModel::ideal_sine);
  CHECK(lo_model_from_string("hard_switching") == LoModel::hard_switching);
  CHECK(lo_model_from_string(to_string(LoModel::hard_switching)) ==
        LoModel::hard_switching);
  CHECK_THROWS_AS(lo_model_from_string("square"), config_error);
}

TEST_CASE("mixer config validation") {
  GilbertMixerConfig ok{1.2, LoModel::hard_switching, 0.36, 11.2};
  CHECK_NOTHROW(validate(ok));
  GilbertMixerConfig bad = ok;
  bad.a3 = -0.1;
  CHECK_THROWS_AS(validate(bad), std::domain_error);
}

TEST_CASE("upconversion sidebands carry half the envelope gain") {
  const double fs = 51.2e9, lo = 6e9, fif = 300e6, a = 0.5;
  const std::size_t n = 4096;  // df = 12.5 MHz; every tone is bin centered
  TimeSeries ifsig;
  ifsig.sample_rate_hz = fs;
  ifsig.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    ifsig.samples[i] =
        a * std::sin(two_pi * fif * static_cast<double>(i) / fs);

  for (LoModel model : {LoModel::ideal_sine, LoModel::hard_switching}) {
    GilbertMixerConfig cfg{1.2, model, 0.0, 11.2};
    const TimeSeries rf = upconvert(cfg, ifsig, lo);
    const double g = std::pow(10.0, 1.2 / 20.0);
    CHECK(tone_amp(rf, lo - fif) == doctest::Approx(g * a / 2.0).epsilon(1e-9));
    CHECK(tone_amp(rf, lo + fif) == doctest::Approx(g * a / 2.0).epsilon(1e-9));
    // double balance: nothing at the LO itself
    CHECK(tone_amp(rf, lo) < 1e-12);
  }
}

TEST_CASE("hard switching third zone sits at -9.54 dBc") {
  const double fs = 51.2e9, lo = 6e9, fif = 300e6;
  const std::size_t n = 4096;
  TimeSeries ifsig;
  ifsig.sample_rate_hz = fs;
  ifsig.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    ifsig.samples[i] = std::sin(two_pi * fif * static_cast<double>(i) / fs);
  GilbertMixerConfig cfg{0.0, LoModel::hard_switching, 0.0, 11.2};
  const TimeSeries rf = upconvert(cfg, ifsig, lo);
  const double principal = tone_amp(rf, lo + fif);
  const double spur = tone_amp(rf, 3.0 * lo - fif);
  CHECK(20.0 * std::log10(spur / principal) ==
        doctest::Approx(-9.5424).epsilon(1e-4));
  // even LO zones cancel by symmetry
  CHECK(tone_amp(rf, 2.0 * lo - fif) < 1e-12);
  CHECK(tone_amp(rf, 2.0 * lo + fif) < 1e-12);
}

TEST_CASE("zero IF gives zero output") {
  const double fs = 51.2e9;
  TimeSeries silent;
  silent.sample_rate_hz = fs;
  silent.samples.assign(4096, 0.0);
  for (LoModel model : {LoModel::ideal_sine, LoModel::hard_switching}) {
    GilbertMixerConfig cfg{1.2, model, 0.36, 11.2};
    const TimeSeries rf = upconvert(cfg, silent, 6e9);
    for (double v : rf.samples) CHECK(v == 0.0);
  }
}

TEST_CASE("upconvert sample-rate preconditions") {
  TimeSeries x;
  x.sample_rate_hz = 12e9;
  x.samples.assign(64, 0.1);
  GilbertMixerConfig hard{0.0, LoModel::hard_switching, 0.0, 0.0};
  GilbertMixerConfig sine{0.0, LoModel::ideal_sine, 0.0, 0.0};
  CHECK_THROWS_AS(upconvert(hard, x, 6e9), std::domain_error);  // < 6.6x
  CHECK_THROWS_AS(upconvert(sine, x, 6e9), std::domain_error);  // < 2.2x
  x.sample_rate_hz = 48e9;
  CHECK_NOTHROW(upconvert(hard, x, 6e9));
}

TEST_CASE("tone table ordering and levels") {
  GilbertMixerConfig cfg{0.0, LoModel::hard_switching, 0.0, 0.0};
  // 500 MHz IF on a 2 GHz LO: dominant sidebands 1.5 / 2.5 GHz come first
  const auto tones = mixer_tone_table(cfg, 1.0, 500e6, 2e9, 3);
  REQUIRE(tones.size() >= 4);
  CHECK(tones[0].freq_hz == doctest::Approx(1.5e9));
  CHECK(tones[1].freq_hz == doctest::Approx(2.5e9));
  CHECK(tones[0].level_dbc == doctest::Approx(0.0));
  CHECK(tones[1].level_dbc == doctest::Approx(0.0));
  // third LO zone at 1/3
  bool found = false;
  for (const auto& t : tones)
    if (t.lo_order == 3 && t.if_order == 1) {
      CHECK(t.level_dbc == doctest::Approx(-9.5424).epsilon(1e-4));
      found = true;
    }
  CHECK(found);
  // no even zones, no frequencies below zero
  for (const auto& t : tones) {
    CHECK(t.lo_order % 2 == 1);
    CHECK(t.freq_hz > 0.0);
  }
}

TEST_CASE("cubic distortion level in the tone table") {
  const double a3 = 0.36, a = 1.0;
  GilbertMixerConfig cfg{0.0, LoModel::ideal_sine, a3, 0.0};
  const auto tones = mixer_tone_table(cfg, a, 300e6, 6e9, 1);
  const double want =
      20.0 * std::log10((a3 * a * a * a / 4.0) /
                        (a + 3.0 * a3 * a * a * a / 4.0));
  for (const auto& t : tones)
    if (t.if_order == 3) CHECK(t.level_dbc == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("a3 calibration round trip") {
  const double a3 = calibrate_a3(23.0, 1.0);
  CHECK(a3 == doctest::Approx(0.359538).epsilon(1e-5));
  // quarter drive needs 16x the coefficient for the same spur ratio
  CHECK(calibrate_a3(23.0, 0.25) == doctest::Approx(16.0 * a3).epsilon(1e-9));
  // the calibrated table reproduces the target exactly
  GilbertMixerConfig cfg{0.0, LoModel::ideal_sine, a3, 0.0};
  for (const auto& t : mixer_tone_table(cfg, 1.0, 300e6, 6e9, 1))
    if (t.if_order == 3)
      CHECK(t.level_dbc == doctest::Approx(-23.0).epsilon(1e-9));
  // an SFDR at or below the hard-switching 1/3 line cannot come from a3
  CHECK_THROWS_AS(calibrate_a3(9.0, 1.0), std::domain_error);
}
