#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chainlab/dco.hpp"
#include "chainlab/rfcore.hpp"
#include "chainlab/specan.hpp"
#include "chainlab/txblocks.hpp"

namespace chainlab {

// ---------------------------------------------------------------------------
// Transmit chain: pulse -> shaper -> mixer, carrier from the oscillator.
// ---------------------------------------------------------------------------

struct TxChainConfig {
  PulseShaperConfig pulse;
  GilbertMixerConfig mixer;
  TankConfig tank;
  double hd2_dbc = -60.0;  // carrier harmonic signature
  double hd3_dbc = -38.0;
  std::size_t code = 0;
  double vfine = 0.5;
  double sample_rate_hz = 48e9;
  std::size_t samples = 1 << 20;
};

struct TxChainResult {
  double carrier_hz;          // tuned oscillator frequency
  double carrier_amplitude_v; // swing the tank would deliver at this tune
  TimeSeries baseband;        // rectangular drive
  TimeSeries shaped;          // after the low-pass chain
  TimeSeries rf;              // after upconversion
  std::vector<double> envelope_v;  // Hilbert envelope of `rf`
  double envelope_peak_v;     // its peak
  // Envelope peak vs (conversion gain * shaped peak), in dB.  Near zero when
  // the chain is consistent end to end.
  double envelope_error_db;
};

// Runs the chain.  The carrier waveform keeps the oscillator's harmonic
// signature but is normalized to unit fundamental: the switching LO port is
// level-insensitive and the mixer's conversion gain carries the scaling.
TxChainResult run_tx_chain(const TxChainConfig& cfg);

// Hilbert-transform envelope of a record (power-of-two length required).
std::vector<double> envelope(const TimeSeries& ts);

// True when the envelope rises monotonically up to its peak.  The envelope
// is boxcar-smoothed over one carrier period first (harmonic content puts a
// few-percent carrier-rate ripple on it); dips smaller than tolerance_frac
// of the peak are ignored.
bool envelope_monotone_rise(const std::vector<double>& env, double carrier_hz,
                            double sample_rate_hz, double tolerance_frac);

// ---------------------------------------------------------------------------
// Receive budget and power accounting.
// ---------------------------------------------------------------------------

struct StageSpec {
  std::string name;
  double nf_db;
  double gain_db;
};

struct CascadeRow {
  std::string name;
  double nf_db;
  double gain_db;
  double cum_nf_db;    // cascade NF up to and including this stage
  double cum_gain_db;  // cascade gain up to and including this stage
};

// Friis: F = F1 + (F2-1)/G1 + (F3-1)/(G1*G2) + ...
std::vector<CascadeRow> friis_cascade(const std::vector<StageSpec>& stages);

// Two-stage shortcut used by the receive budget.
double cascade_nf_db(double nf1_db, double gain1_db, double nf2_db);

struct PowerEntry {
  std::string name;
  double mw;
};

struct PowerSummary {
  std::vector<PowerEntry> blocks;
  double blocks_mw;        // sum of the listed blocks
  double unattributed_mw;  // budget remainder
  double total_mw;
};

// Splits a total budget across named blocks; the remainder is reported as
// unattributed.  Throws std::domain_error if the blocks exceed the total.
PowerSummary power_summary(const std::vector<PowerEntry>& blocks,
                           double total_mw);

}  // namespace chainlab
