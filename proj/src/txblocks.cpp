#include "chainlab/txblocks.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chainlab/errors.hpp"

namespace chainlab {

static void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(what) + " must be > 0");
}

void validate(const PulseShaperConfig& cfg) {
  require_positive(cfg.width_s, "PulseShaperConfig: width");
  require_positive(cfg.amplitude_v, "PulseShaperConfig: amplitude");
  require_positive(cfg.corner_hz, "PulseShaperConfig: corner");
  if (cfg.stages < 1)
    throw std::domain_error("PulseShaperConfig: need at least one stage");
}

TimeSeries rect_pulse(const PulseShaperConfig& cfg, double sample_rate_hz,
                      std::size_t n) {
  validate(cfg);
  require_positive(sample_rate_hz, "rect_pulse: sample rate");
  const double spw = cfg.width_s * sample_rate_hz;  // samples per width
  if (spw < 8.0)
    throw std::domain_error("rect_pulse: fewer than 8 samples per width");
  const std::size_t i0 = static_cast<std::size_t>(std::llround(spw));
  const std::size_t i1 = static_cast<std::size_t>(std::llround(2.0 * spw));
  std::size_t total = n;
  if (total == 0) total = static_cast<std::size_t>(std::llround(10.0 * spw));
  if (total < i1 + 1)
    throw std::domain_error("rect_pulse: record too short for the pulse");
  TimeSeries ts;
  ts.sample_rate_hz = sample_rate_hz;
  ts.samples.assign(total, 0.0);
  for (std::size_t i = i0; i < i1; ++i) ts.samples[i] = cfg.amplitude_v;
  return ts;
}

TimeSeries shape_pulse(const PulseShaperConfig& cfg, const TimeSeries& in) {
  validate(cfg);
  validate(in);
  if (std::isinf(cfg.corner_hz)) return in;  // shaper bypass
  if (!(in.sample_rate_hz >= 20.0 * cfg.corner_hz))
    throw std::domain_error(
        "shape_pulse: sample rate must be >= 20x the stage corner");
  // Bilinear-transform one-pole low pass, applied `stages` times:
  //   K = tan(pi*fc/fs), b = K/(1+K), a = (K-1)/(1+K)
  const double k = std::tan(pi * cfg.corner_hz / in.sample_rate_hz);
  const double b = k / (1.0 + k);
  const double a = (k - 1.0) / (1.0 + k);
  TimeSeries out = in;
  for (int s = 0; s < cfg.stages; ++s) {
    double x1 = 0.0, y1 = 0.0;
    for (double& v : out.samples) {
      const double x = v;
      const double y = b * (x + x1) - a * y1;
      v = y;
      x1 = x;
      y1 = y;
    }
  }
  return out;
}

// Step response of n identical poles is the regularized lower gamma
// function P(n, t/tau); find its 10% and 90% crossings by bisection.
static double gamma_p(int n, double x) {
  // P(n, x) = 1 - exp(-x) * sum_{k<n} x^k/k!  for integer n.
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= x / static_cast<double>(k);
    sum += term;
  }
  return 1.0 - std::exp(-x) * sum;
}

static double gamma_p_inverse(int n, double target) {
  double lo = 0.0, hi = 1.0;
  while (gamma_p(n, hi) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gamma_p(n, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double shaper_rise_time_s(const PulseShaperConfig& cfg) {
  validate(cfg);
  if (std::isinf(cfg.corner_hz)) return 0.0;
  const double tau = 1.0 / (two_pi * cfg.corner_hz);
  return tau *
         (gamma_p_inverse(cfg.stages, 0.9) - gamma_p_inverse(cfg.stages, 0.1));
}

double measured_rise_time_s(const TimeSeries& ts) {
  validate(ts);
  double peak = 0.0;
  for (double v : ts.samples) peak = std::max(peak, v);
  if (!(peak > 0.0))
    throw analysis_error("measured_rise_time_s: no positive peak");
  const double lo = 0.1 * peak, hi = 0.9 * peak;
  auto crossing = [&](double level) -> double {
    for (std::size_t i = 1; i < ts.samples.size(); ++i) {
      if (ts.samples[i - 1] < level && ts.samples[i] >= level) {
        const double frac = (level - ts.samples[i - 1]) /
                            (ts.samples[i] - ts.samples[i - 1]);
        return (static_cast<double>(i - 1) + frac) / ts.sample_rate_hz;
      }
    }
    throw analysis_error("measured_rise_time_s: level never crossed");
  };
  return crossing(hi) - crossing(lo);
}

const char* to_string(LoModel m) {
  return m == LoModel::ideal_sine ? "ideal_sine" : "hard_switching";
}

LoModel lo_model_from_string(const std::string& s) {
  if (s == "ideal_sine") return LoModel::ideal_sine;
  if (s == "hard_switching") return LoModel::hard_switching;
  throw config_error("unknown LO model '" + s + "'");
}

void validate(const GilbertMixerConfig& cfg) {
  if (!std::isfinite(cfg.conversion_gain_db))
    throw std::domain_error("GilbertMixerConfig: conversion gain must be finite");
  if (cfg.a3 < 0.0)
    throw std::domain_error("GilbertMixerConfig: a3 must be >= 0");
}

static std::vector<double> compressed(const GilbertMixerConfig& cfg,
                                      const TimeSeries& if_in) {
  std::vector<double> x(if_in.samples.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = if_in.samples[i];
    x[i] = v + cfg.a3 * v * v * v;
  }
  return x;
}

TimeSeries upconvert(const GilbertMixerConfig& cfg, const TimeSeries& if_in,
                     double lo_hz) {
  validate(cfg);
  validate(if_in);
  require_positive(lo_hz, "upconvert: LO frequency");
  const double fs = if_in.sample_rate_hz;
  const double g = ratio_from_db(cfg.conversion_gain_db, DbKind::amplitude);
  std::vector<double> x = compressed(cfg, if_in);

  TimeSeries out;
  out.sample_rate_hz = fs;
  out.samples.assign(x.size(), 0.0);
  const double wlo = two_pi * lo_hz / fs;

  if (cfg.lo_model == LoModel::ideal_sine) {
    if (!(fs > 2.2 * lo_hz))
      throw std::domain_error("upconvert: sample rate must exceed 2.2x LO");
    for (std::size_t i = 0; i < x.size(); ++i)
      out.samples[i] = g * x[i] * std::sin(wlo * static_cast<double>(i));
    return out;
  }

  // Hard switching: band-limited +-1 square so no LO harmonic aliases.
  // Scaling pi/4 makes the fundamental's conversion gain equal g.
  if (!(fs > 6.6 * lo_hz))
    throw std::domain_error("upconvert: sample rate must exceed 6.6x LO");
  const double k = g * pi / 4.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double c = 0.0;
    for (int m = 1; m * lo_hz < fs / 2.0; m += 2)
      c += (4.0 / pi) * std::sin(wlo * static_cast<double>(m) *
                                 static_cast<double>(i)) /
           static_cast<double>(m);
    out.samples[i] = k * x[i] * c;
  }
  return out;
}

TimeSeries upconvert_with_carrier(const GilbertMixerConfig& cfg,
                                  const TimeSeries& if_in,
                                  const TimeSeries& carrier) {
  validate(cfg);
  validate(if_in);
  validate(carrier);
  if (carrier.sample_rate_hz != if_in.sample_rate_hz ||
      carrier.samples.size() != if_in.samples.size())
    throw std::domain_error(
        "upconvert_with_carrier: IF and carrier records must match");
  const double g = ratio_from_db(cfg.conversion_gain_db, DbKind::amplitude);
  std::vector<double> x = compressed(cfg, if_in);
  TimeSeries out;
  out.sample_rate_hz = if_in.sample_rate_hz;
  out.samples.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.samples[i] = g * x[i] * carrier.samples[i];
  return out;
}

std::vector<MixerTone> mixer_tone_table(const GilbertMixerConfig& cfg,
                                        double a_if, double f_if_hz,
                                        double lo_hz, int max_lo_order) {
  validate(cfg);
  require_positive(a_if, "mixer_tone_table: IF amplitude");
  require_positive(f_if_hz, "mixer_tone_table: IF frequency");
  require_positive(lo_hz, "mixer_tone_table: LO frequency");
  if (max_lo_order < 1)
    throw std::domain_error("mixer_tone_table: max order must be >= 1");

  // IF path harmonics of x + a3*x^3 for x = A*sin:
  //   fundamental A*(1 + 3*a3*A^2/4), third a3*A^3/4.
  const double if1 = a_if * (1.0 + 0.75 * cfg.a3 * a_if * a_if);
  const double if3 = 0.25 * cfg.a3 * a_if * a_if * a_if;

  const int m_max =
      cfg.lo_model == LoModel::ideal_sine ? 1 : max_lo_order;
  std::vector<MixerTone> tones;
  for (int m = 1; m <= m_max; m += 2) {
    const double lo_amp = cfg.lo_model == LoModel::ideal_sine
                              ? 1.0
                              : 1.0 / static_cast<double>(m);
    for (int k : {1, 3}) {
      const double if_amp = k == 1 ? if1 : if3;
      if (!(if_amp > 0.0)) continue;
      const double rel = (if_amp / if1) * lo_amp;
      for (int sgn : {-1, 1}) {
        const double f = m * lo_hz + sgn * k * f_if_hz;
        if (f <= 0.0) continue;
        MixerTone t;
        t.freq_hz = f;
        t.level_dbc = db_from_ratio(rel, DbKind::amplitude);
        t.lo_order = m;
        t.if_order = k;
        tones.push_back(t);
      }
    }
  }
  return tones;
}

double calibrate_a3(double sfdr_target_db, double drive_amplitude_v) {
  require_positive(drive_amplitude_v, "calibrate_a3: drive amplitude");
  require_positive(sfdr_target_db, "calibrate_a3: SFDR target");
  const double r = ratio_from_db(-sfdr_target_db, DbKind::amplitude);
  const double a2 = drive_amplitude_v * drive_amplitude_v;
  const double den = a2 * (1.0 - 3.0 * r);
  if (!(den > 0.0))
    throw std::domain_error("calibrate_a3: target SFDR too low to synthesize");
  return 4.0 * r / den;
}

}  // namespace chainlab
