#include "chainlab/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chainlab/errors.hpp"
#include "fft.hpp"

namespace chainlab {

std::vector<double> envelope(const TimeSeries& ts) {
  validate(ts);
  if (!detail::is_power_of_two(ts.samples.size()))
    throw std::domain_error("envelope: record length must be a power of two");
  std::vector<complex> z = detail::analytic_signal(ts.samples);
  std::vector<double> env(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) env[i] = std::abs(z[i]);
  return env;
}

TxChainResult run_tx_chain(const TxChainConfig& cfg) {
  if (!detail::is_power_of_two(cfg.samples))
    throw std::domain_error("run_tx_chain: sample count must be a power of two");

  TxChainResult res;
  res.carrier_hz = tune_hz(cfg.tank, cfg.code, cfg.vfine);
  res.carrier_amplitude_v = osc_amplitude_v(
      cfg.tank.idc_a, tank_rp_ohm(cfg.tank, res.carrier_hz));

  if (!(cfg.sample_rate_hz > 6.0 * res.carrier_hz))
    throw std::domain_error(
        "run_tx_chain: sample rate must exceed 6x the carrier");

  res.baseband = rect_pulse(cfg.pulse, cfg.sample_rate_hz, cfg.samples);
  res.shaped = shape_pulse(cfg.pulse, res.baseband);

  // Carrier with the oscillator's harmonic signature, unit fundamental.
  DcoToneSpec tone;
  tone.f0_hz = res.carrier_hz;
  tone.amplitude_v = 1.0;
  tone.hd2_dbc = cfg.hd2_dbc;
  tone.hd3_dbc = cfg.hd3_dbc;
  TimeSeries carrier = synthesize(tone, cfg.sample_rate_hz, cfg.samples);

  res.rf = upconvert_with_carrier(cfg.mixer, res.shaped, carrier);

  res.envelope_v = envelope(res.rf);
  res.envelope_peak_v =
      *std::max_element(res.envelope_v.begin(), res.envelope_v.end());

  double shaped_peak = 0.0;
  for (double v : res.shaped.samples) shaped_peak = std::max(shaped_peak, v);
  const double g =
      ratio_from_db(cfg.mixer.conversion_gain_db, DbKind::amplitude);
  if (!(shaped_peak > 0.0) || !(res.envelope_peak_v > 0.0))
    throw analysis_error("run_tx_chain: degenerate chain output");
  res.envelope_error_db =
      db_from_ratio(res.envelope_peak_v / (g * shaped_peak), DbKind::amplitude);
  return res;
}

bool envelope_monotone_rise(const std::vector<double>& env, double carrier_hz,
                            double sample_rate_hz, double tolerance_frac) {
  if (env.empty()) throw std::domain_error("envelope_monotone_rise: empty");
  if (!(carrier_hz > 0.0) || !(sample_rate_hz > carrier_hz))
    throw std::domain_error("envelope_monotone_rise: bad rates");
  const std::size_t w = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(sample_rate_hz / carrier_hz)));
  // Centered boxcar over one carrier period.
  std::vector<double> sm(env.size());
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    acc += env[i];
    ++count;
    if (count > w) {
      acc -= env[i - w];
      --count;
    }
    sm[i] = acc / static_cast<double>(count);
  }
  const std::size_t ipk =
      std::max_element(sm.begin(), sm.end()) - sm.begin();
  const double tol = tolerance_frac * sm[ipk];
  // Compare against the running maximum so slow sags count as dips too,
  // no matter how gently they descend.
  double high = sm[0];
  for (std::size_t i = 1; i <= ipk; ++i) {
    if (sm[i] < high - tol) return false;
    high = std::max(high, sm[i]);
  }
  return true;
}

std::vector<CascadeRow> friis_cascade(const std::vector<StageSpec>& stages) {
  if (stages.empty())
    throw std::domain_error("friis_cascade: no stages");
  std::vector<CascadeRow> rows;
  rows.reserve(stages.size());
  double f_total = 0.0;   // cascade noise factor
  double g_total = 1.0;   // linear gain product of preceding stages
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageSpec& st = stages[i];
    const double f = ratio_from_db(st.nf_db, DbKind::power);
    if (!(f >= 1.0))
      throw std::domain_error("friis_cascade: noise figure must be >= 0 dB");
    f_total = i == 0 ? f : f_total + (f - 1.0) / g_total;
    g_total *= ratio_from_db(st.gain_db, DbKind::power);
    CascadeRow row;
    row.name = st.name;
    row.nf_db = st.nf_db;
    row.gain_db = st.gain_db;
    row.cum_nf_db = db_from_ratio(f_total, DbKind::power);
    row.cum_gain_db = db_from_ratio(g_total, DbKind::power);
    rows.push_back(row);
  }
  return rows;
}

double cascade_nf_db(double nf1_db, double gain1_db, double nf2_db) {
  std::vector<CascadeRow> rows = friis_cascade(
      {{"first", nf1_db, gain1_db}, {"second", nf2_db, 0.0}});
  return rows.back().cum_nf_db;
}

PowerSummary power_summary(const std::vector<PowerEntry>& blocks,
                           double total_mw) {
  if (!(total_mw >= 0.0))
    throw std::domain_error("power_summary: total must be >= 0");
  double sum = 0.0;
  for (const PowerEntry& b : blocks) {
    if (!(b.mw >= 0.0))
      throw std::domain_error("power_summary: block power must be >= 0");
    sum += b.mw;
  }
  if (sum > total_mw)
    throw std::domain_error(
        "power_summary: block powers exceed the total budget");
  PowerSummary s;
  s.blocks = blocks;
  s.blocks_mw = sum;
  s.unattributed_mw = total_mw - sum;
  s.total_mw = total_mw;
  return s;
}

}  // namespace chainlab
