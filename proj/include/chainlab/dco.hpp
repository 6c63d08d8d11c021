#pragma once

#include <cstddef>
#include <vector>

#include "chainlab/rfcore.hpp"

namespace chainlab {

// ---------------------------------------------------------------------------
// LC tank, switched capacitor bank, and oscillation basics.
// ---------------------------------------------------------------------------

// Gate/drain capacitances of the four cross-coupled core devices.  The two
// NMOS/PMOS half circuits each contribute the series combination of their
// (2*Cgd + Cgs) sums, and the halves add in parallel at the tank.
struct CrossCoupledParasitics {
  double cgd1_f, cgs1_f;
  double cgd2_f, cgs2_f;
  double cgd3_f, cgs3_f;
  double cgd4_f, cgs4_f;
};

// Effective parasitic capacitance loading the tank.  Always positive for
// positive device capacitances.
double parasitic_load_f(const CrossCoupledParasitics& p);

// f = 1 / (2*pi*sqrt(L*C)) and its inversion C = 1 / (L*(2*pi*f)^2).
double osc_frequency_hz(double l_h, double c_total_f);
double capacitance_for_hz(double l_h, double f_hz);

// Analog fine-tune varactor.  Capacitance decreases as the control voltage
// rises so that frequency increases monotonically with vfine.
struct VaractorSpec {
  double cmin_f;
  double cmax_f;

  // vfine in [0, 1].
  double capacitance(double vfine) const;
};

struct TankConfig {
  double l_h;                  // tank inductance
  double q;                    // loaded quality factor
  double idc_a;                // core bias current
  std::vector<double> bank_f;  // switched caps, one per code, largest first
  VaractorSpec varactor;
  CrossCoupledParasitics parasitics;
};

void validate(const TankConfig& t);

// Oscillation frequency for a bank code and fine-tune voltage.
// code indexes bank_f; vfine in [0, 1].  Monotone increasing in both.
double tune_hz(const TankConfig& t, std::size_t code, double vfine);

// Equivalent parallel tank resistance Rp = w*L*Q at frequency f.
double tank_rp_ohm(const TankConfig& t, double f);

// Differential swing of a current-limited cross-coupled oscillator:
//   A = 4*Idc*Rp/pi
double osc_amplitude_v(double idc_a, double rp_ohm);
double bias_for_amplitude_a(double amplitude_v, double rp_ohm);

// Small-signal loop gain gm*Rp and the start-up check against a margin.
double startup_loop_gain(double gm_s, double rp_ohm);
bool startup_ok(double gm_s, double rp_ohm, double margin);
double startup_gm_required_s(double rp_ohm, double margin);

// Bank values that hit the target frequencies at mid varactor (vfine = 0.5).
// Throws std::domain_error if a target needs a non-positive bank cap.
std::vector<double> solve_bank_f(const TankConfig& t,
                                 const std::vector<double>& targets_hz);

// ---------------------------------------------------------------------------
// Leeson phase-noise model.
// ---------------------------------------------------------------------------

struct PhaseNoiseModel {
  double q;             // resonator loaded Q
  double psig_w;        // carrier power
  double corner_hz;     // 1/f^3 corner
  double noise_factor;  // excess noise factor F
};

// L(df) = 10*log10( (2*F*k*T/Psig) * (1 + (f0/(2*Q*df))^2) * (1 + fc/df) )
// in dBc/Hz at offset df from carrier f0.  df > 0.
double phase_noise_dbc(const PhaseNoiseModel& m, double f0_hz, double df_hz);

// Noise factor that makes the model hit target_dbc at (f0, df).  F enters
// linearly, so this is exact.
double calibrate_noise_factor(const PhaseNoiseModel& m, double f0_hz,
                              double df_hz, double target_dbc);

// ---------------------------------------------------------------------------
// Behavioral output waveform.
// ---------------------------------------------------------------------------

// Fundamental plus second/third harmonic at fixed dBc levels.
struct DcoToneSpec {
  double f0_hz;
  double amplitude_v;
  double hd2_dbc;  // <= 0
  double hd3_dbc;  // <= 0
};

// Sampled waveform; requires fs > 6*f0 so the third harmonic is clean.
TimeSeries synthesize(const DcoToneSpec& spec, double sample_rate_hz,
                      std::size_t n);

}  // namespace chainlab
