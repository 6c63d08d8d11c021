#pragma once

#include <cstddef>
#include <vector>

#include "chainlab/rfcore.hpp"

namespace chainlab {

// ---------------------------------------------------------------------------
// Baseband pulse generation and shaping.
// ---------------------------------------------------------------------------

// Rectangular drive pulse and the low-pass chain that rounds it toward a
// Gaussian-like shape.  corner_hz = infinity bypasses the shaper.
struct PulseShaperConfig {
  double width_s;      // pulse width
  double amplitude_v;  // flat-top level
  double corner_hz;    // per-stage -3 dB corner (may be +inf)
  int stages;          // identical one-pole stages, >= 1
};

void validate(const PulseShaperConfig& cfg);

// Unit-step up/down pulse: one width of leading zeros, the pulse, then
// trailing zeros.  n = 0 picks the default record of 10x width.
TimeSeries rect_pulse(const PulseShaperConfig& cfg, double sample_rate_hz,
                      std::size_t n = 0);

// Runs the input through `stages` identical one-pole low-pass sections
// (bilinear transform).  Requires fs >= 20x the corner so the discrete
// stage tracks the analog prototype.
TimeSeries shape_pulse(const PulseShaperConfig& cfg, const TimeSeries& in);

// Analytic 10-90% rise time of the cascade's step response, from the
// gamma-CDF crossings of n identical poles with tau = 1/(2*pi*fc).
double shaper_rise_time_s(const PulseShaperConfig& cfg);

// Measured 10-90% rise on the leading edge of a shaped pulse.
double measured_rise_time_s(const TimeSeries& ts);

// ---------------------------------------------------------------------------
// Double-balanced upconversion mixer.
// ---------------------------------------------------------------------------

enum class LoModel { ideal_sine, hard_switching };

const char* to_string(LoModel m);
LoModel lo_model_from_string(const std::string& s);

// Behavioral model: the IF path compresses as x + a3*x^3, then multiplies a
// switching waveform with unit fundamental.  conversion_gain_db is envelope
// referenced: the RF envelope equals gain * |x| for small drive.
struct GilbertMixerConfig {
  double conversion_gain_db;
  LoModel lo_model = LoModel::hard_switching;
  double a3 = 0.0;    // cubic coefficient, >= 0
  double nf_db = 0.0; // used by cascade budgets only
};

void validate(const GilbertMixerConfig& cfg);

// Multiplies the (compressed) IF signal by the LO waveform.  For
// hard_switching the LO is a band-limited square: odd harmonics at 1/m up
// to Nyquist, which needs fs > 6.6*lo so third-harmonic products stay
// alias-free.  ideal_sine needs fs > 2.2*lo.
TimeSeries upconvert(const GilbertMixerConfig& cfg, const TimeSeries& if_in,
                     double lo_hz);

// Same IF path, but against a caller-supplied carrier waveform whose
// fundamental is expected at unit amplitude (e.g. an oscillator output with
// its harmonic signature).  No band-limiting is applied.
TimeSeries upconvert_with_carrier(const GilbertMixerConfig& cfg,
                                  const TimeSeries& if_in,
                                  const TimeSeries& carrier);

// Analytic line spectrum for a single IF tone of amplitude a_if: products
// at m*lo +- k*if with levels relative to the principal lo +- if pair.
struct MixerTone {
  double freq_hz;
  double level_dbc;  // relative to the principal sideband
  int lo_order;      // m, odd
  int if_order;      // k in {1, 3}
};

std::vector<MixerTone> mixer_tone_table(const GilbertMixerConfig& cfg,
                                        double a_if, double f_if_hz,
                                        double lo_hz, int max_lo_order);

// Cubic coefficient that produces a given in-band SFDR at a given IF drive
// amplitude: the lo+-3if spur over the principal pair is
// (a3*A^2/4) / (1 + 3*a3*A^2/4).
double calibrate_a3(double sfdr_target_db, double drive_amplitude_v);

}  // namespace chainlab
