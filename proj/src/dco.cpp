#include "chainlab/dco.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chainlab {

static void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    throw std::domain_error(std::string(what) + " must be > 0");
}

double parasitic_load_f(const CrossCoupledParasitics& p) {
  for (double v : {p.cgd1_f, p.cgs1_f, p.cgd2_f, p.cgs2_f, p.cgd3_f, p.cgs3_f,
                   p.cgd4_f, p.cgs4_f})
    require_positive(v, "CrossCoupledParasitics: capacitance");
  auto half = [](double ca, double cb) { return ca * cb / (ca + cb); };
  double upper = half(2.0 * p.cgd4_f + p.cgs4_f, 2.0 * p.cgd3_f + p.cgs3_f);
  double lower = half(2.0 * p.cgd2_f + p.cgs2_f, 2.0 * p.cgd1_f + p.cgs1_f);
  return upper + lower;
}

double osc_frequency_hz(double l_h, double c_total_f) {
  require_positive(l_h, "osc_frequency_hz: inductance");
  require_positive(c_total_f, "osc_frequency_hz: capacitance");
  return 1.0 / (two_pi * std::sqrt(l_h * c_total_f));
}

double capacitance_for_hz(double l_h, double f_hz) {
  require_positive(l_h, "capacitance_for_hz: inductance");
  require_positive(f_hz, "capacitance_for_hz: frequency");
  const double w = two_pi * f_hz;
  return 1.0 / (l_h * w * w);
}

double VaractorSpec::capacitance(double vfine) const {
  require_positive(cmin_f, "VaractorSpec: cmin");
  if (!(cmax_f > cmin_f))
    throw std::domain_error("VaractorSpec: cmax must exceed cmin");
  if (!(vfine >= 0.0 && vfine <= 1.0))
    throw std::domain_error("VaractorSpec: vfine must be in [0, 1]");
  return cmax_f - vfine * (cmax_f - cmin_f);
}

void validate(const TankConfig& t) {
  require_positive(t.l_h, "TankConfig: inductance");
  require_positive(t.q, "TankConfig: quality factor");
  require_positive(t.idc_a, "TankConfig: bias current");
  if (t.bank_f.empty())
    throw std::domain_error("TankConfig: capacitor bank is empty");
  for (double c : t.bank_f) require_positive(c, "TankConfig: bank capacitance");
  for (std::size_t i = 1; i < t.bank_f.size(); ++i)
    if (!(t.bank_f[i] < t.bank_f[i - 1]))
      throw std::domain_error(
          "TankConfig: bank must be ordered largest to smallest");
  (void)t.varactor.capacitance(0.0);
  (void)parasitic_load_f(t.parasitics);
}

double tune_hz(const TankConfig& t, std::size_t code, double vfine) {
  validate(t);
  if (code >= t.bank_f.size())
    throw std::range_error("tune_hz: code outside bank range");
  double c_total = t.bank_f[code] + t.varactor.capacitance(vfine) +
                   parasitic_load_f(t.parasitics);
  return osc_frequency_hz(t.l_h, c_total);
}

double tank_rp_ohm(const TankConfig& t, double f) {
  require_positive(t.l_h, "tank_rp_ohm: inductance");
  require_positive(t.q, "tank_rp_ohm: quality factor");
  require_positive(f, "tank_rp_ohm: frequency");
  return two_pi * f * t.l_h * t.q;
}

double osc_amplitude_v(double idc_a, double rp_ohm) {
  require_positive(idc_a, "osc_amplitude_v: bias current");
  require_positive(rp_ohm, "osc_amplitude_v: tank resistance");
  return 4.0 * idc_a * rp_ohm / pi;
}

double bias_for_amplitude_a(double amplitude_v, double rp_ohm) {
  require_positive(amplitude_v, "bias_for_amplitude_a: amplitude");
  require_positive(rp_ohm, "bias_for_amplitude_a: tank resistance");
  return amplitude_v * pi / (4.0 * rp_ohm);
}

double startup_loop_gain(double gm_s, double rp_ohm) {
  require_positive(gm_s, "startup_loop_gain: gm");
  require_positive(rp_ohm, "startup_loop_gain: tank resistance");
  return gm_s * rp_ohm;
}

bool startup_ok(double gm_s, double rp_ohm, double margin) {
  require_positive(margin, "startup_ok: margin");
  return startup_loop_gain(gm_s, rp_ohm) >= margin;
}

double startup_gm_required_s(double rp_ohm, double margin) {
  require_positive(rp_ohm, "startup_gm_required_s: tank resistance");
  require_positive(margin, "startup_gm_required_s: margin");
  return margin / rp_ohm;
}

std::vector<double> solve_bank_f(const TankConfig& t,
                                 const std::vector<double>& targets_hz) {
  if (targets_hz.empty())
    throw std::domain_error("solve_bank_f: no target frequencies");
  const double c_fixed =
      t.varactor.capacitance(0.5) + parasitic_load_f(t.parasitics);
  std::vector<double> bank;
  bank.reserve(targets_hz.size());
  for (double f : targets_hz) {
    double c = capacitance_for_hz(t.l_h, f) - c_fixed;
    if (!(c > 0.0))
      throw std::domain_error(
          "solve_bank_f: target " + std::to_string(f) +
          " Hz needs a non-positive bank capacitance");
    bank.push_back(c);
  }
  for (std::size_t i = 1; i < bank.size(); ++i)
    if (!(bank[i] < bank[i - 1]))
      throw std::domain_error(
          "solve_bank_f: targets must be strictly increasing");
  return bank;
}

static double leeson_linear(const PhaseNoiseModel& m, double f0_hz,
                            double df_hz) {
  require_positive(m.q, "PhaseNoiseModel: Q");
  require_positive(m.psig_w, "PhaseNoiseModel: carrier power");
  if (m.corner_hz < 0.0)
    throw std::domain_error("PhaseNoiseModel: corner must be >= 0");
  require_positive(f0_hz, "phase_noise: carrier frequency");
  require_positive(df_hz, "phase_noise: offset");
  const double kt2 = 2.0 * boltzmann_k * noise_temp_k / m.psig_w;
  const double sel = f0_hz / (2.0 * m.q * df_hz);
  return kt2 * (1.0 + sel * sel) * (1.0 + m.corner_hz / df_hz);
}

double phase_noise_dbc(const PhaseNoiseModel& m, double f0_hz, double df_hz) {
  require_positive(m.noise_factor, "PhaseNoiseModel: noise factor");
  return 10.0 * std::log10(m.noise_factor * leeson_linear(m, f0_hz, df_hz));
}

double calibrate_noise_factor(const PhaseNoiseModel& m, double f0_hz,
                              double df_hz, double target_dbc) {
  double f = std::pow(10.0, target_dbc / 10.0) / leeson_linear(m, f0_hz, df_hz);
  if (!(f > 0.0) || !std::isfinite(f))
    throw std::domain_error("calibrate_noise_factor: target unreachable");
  return f;
}

TimeSeries synthesize(const DcoToneSpec& spec, double sample_rate_hz,
                      std::size_t n) {
  require_positive(spec.f0_hz, "synthesize: fundamental");
  require_positive(spec.amplitude_v, "synthesize: amplitude");
  if (spec.hd2_dbc > 0.0 || spec.hd3_dbc > 0.0)
    throw std::domain_error("synthesize: harmonic levels must be <= 0 dBc");
  if (!(sample_rate_hz > 6.0 * spec.f0_hz))
    throw std::domain_error(
        "synthesize: sample rate must exceed 6x the fundamental");
  if (n == 0) throw std::domain_error("synthesize: need at least one sample");
  const double a2 = spec.amplitude_v * ratio_from_db(spec.hd2_dbc, DbKind::amplitude);
  const double a3 = spec.amplitude_v * ratio_from_db(spec.hd3_dbc, DbKind::amplitude);
  TimeSeries ts;
  ts.sample_rate_hz = sample_rate_hz;
  ts.samples.resize(n);
  const double w = two_pi * spec.f0_hz / sample_rate_hz;
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = w * static_cast<double>(i);
    ts.samples[i] = spec.amplitude_v * std::sin(ph) + a2 * std::sin(2.0 * ph) +
                    a3 * std::sin(3.0 * ph);
  }
  return ts;
}

}  // namespace chainlab
