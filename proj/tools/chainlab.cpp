// chainlab: behavioral analysis CLI for a 2-6 GHz UWB transmit/receive chain.
// Subcommands cover the LNA input network, the oscillator, pulse shaping,
// the upconversion mixer, the composed TX chain, the RX noise budget, and
// standalone mask checking.  All artifacts are deterministic: fixed float
// formatting, fixed ordering, no wall-clock timestamps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "chainlab/chain.hpp"
#include "chainlab/config.hpp"
#include "chainlab/dco.hpp"
#include "chainlab/errors.hpp"
#include "chainlab/netsolve.hpp"
#include "chainlab/report.hpp"
#include "chainlab/rfcore.hpp"
#include "chainlab/specan.hpp"
#include "chainlab/txblocks.hpp"

namespace fs = std::filesystem;
using namespace chainlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitMask = 3;
constexpr int kExitAnalysis = 4;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::size_t points = 0;
  bool enforce_mask = false;
  std::string spectrum_path;  // mask-check
  std::string mask_path;      // mask-check
};

RunConfig resolve_config(const CliOptions& cli) {
  RunConfig cfg = default_profile();
  if (const char* env = std::getenv("UWB_CHAINLAB_PROFILE"); env && *env)
    apply_config_file(cfg, env);
  if (!cli.config_path.empty()) apply_config_file(cfg, cli.config_path);
  return cfg;
}

fs::path prepare_out_dir(const CliOptions& cli, const RunConfig& cfg) {
  fs::path dir = cli.out_dir.empty() ? fs::path(cfg.out_dir)
                                     : fs::path(cli.out_dir);
  fs::create_directories(dir);
  return dir;
}

// Every run starts its manifest by emitting the resolved configuration, so
// the config hash always refers to an artifact the reader can inspect.
RunManifest start_run(const std::string& command, const RunConfig& cfg,
                      const fs::path& dir) {
  const std::string resolved = dump_config(cfg);
  RunManifest man(command, cfg.profile, fnv1a64(resolved));
  man.emit(dir, "resolved_config.cfg", "config", resolved);
  return man;
}

std::string mask_report_json(const SpectralMask& mask, const MaskReport& rep) {
  nlohmann::json j;
  j["mask"] = mask.name;
  j["reference"] = to_string(mask.reference);
  j["verdict"] = rep.pass ? "pass" : "fail";
  j["worst_margin_db"] = rep.worst_margin_db;
  j["worst_frequency_hz"] = rep.worst_freq_hz;
  nlohmann::json segs = nlohmann::json::array();
  for (const SegmentResult& sr : rep.segments) {
    nlohmann::json s;
    s["f_lo_hz"] = sr.segment.f_lo_hz;
    s["f_hi_hz"] = sr.segment.f_hi_hz;
    s["limit_db"] = sr.segment.limit_db;
    s["evaluated"] = sr.evaluated;
    if (sr.evaluated) {
      s["margin_db"] = sr.margin_db;
      s["worst_frequency_hz"] = sr.worst_freq_hz;
    }
    segs.push_back(s);
  }
  j["segments"] = segs;
  return j.dump(2) + "\n";
}

// --- lna -------------------------------------------------------------------

int run_lna(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("lna", cfg, dir);

  const FrequencyGrid grid = cfg.build_grid(cli.points);
  const LnaDesign design = cfg.build_lna();
  const NoiseProfile nfp = cfg.build_nf_profile();
  const std::vector<LnaSweepRow> rows = lna_sweep(design, nfp, grid);

  double s11_min = rows.front().s11_db, s11_min_hz = rows.front().f_hz;
  double gain_min = rows.front().gain_db, gain_max = rows.front().gain_db;
  for (const LnaSweepRow& r : rows) {
    if (r.s11_db < s11_min) {
      s11_min = r.s11_db;
      s11_min_hz = r.f_hz;
    }
    gain_min = std::min(gain_min, r.gain_db);
    gain_max = std::max(gain_max, r.gain_db);
  }

  CsvTable s11({"f_Hz", "re_zin_ohm", "im_zin_ohm", "s11_dB"});
  s11.add_comment("match_real_ohm: " +
                  format_sci(synthesized_real_ohm(design.device,
                                                  design.match.ls_h)));
  s11.add_comment("s11_min_dB: " + format_sci(s11_min));
  s11.add_comment("s11_min_Hz: " + format_sci(s11_min_hz));
  CsvTable gain({"f_Hz", "gain_dB"});
  gain.add_comment("gain_min_dB: " + format_sci(gain_min));
  gain.add_comment("gain_max_dB: " + format_sci(gain_max));
  gain.add_comment("load_spur_Hz: " +
                   format_sci(design.load.spur_resonance_hz()));
  CsvTable nf({"f_Hz", "nf_dB"});
  for (const LnaSweepRow& r : rows) {
    s11.add_row({format_sci(r.f_hz), format_sci(r.zin.real()),
                 format_sci(r.zin.imag()), format_sci(r.s11_db)});
    gain.add_row({format_sci(r.f_hz), format_sci(r.gain_db)});
    nf.add_row({format_sci(r.f_hz), format_sci(r.nf_db)});
  }
  man.emit(dir, "s11.csv", "csv", s11.render());
  man.emit(dir, "gain.csv", "csv", gain.render());
  man.emit(dir, "nf.csv", "csv", nf.render());
  man.write(dir);
  std::cout << "lna: s11 min " << format_sci(s11_min) << " dB at "
            << format_sci(s11_min_hz) << " Hz, gain "
            << format_sci(gain_min) << ".." << format_sci(gain_max)
            << " dB\n";
  return kExitOk;
}

// --- dco -------------------------------------------------------------------

int run_dco(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("dco", cfg, dir);

  const TankConfig tank = cfg.build_tank();
  const PhaseNoiseModel pn = cfg.build_phase_noise();

  CsvTable tuning({"code", "vfine", "f_Hz", "amplitude_V", "pn_1MHz_dBc"});
  for (std::size_t code = 0; code < tank.bank_f.size(); ++code) {
    for (double vfine : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double f = tune_hz(tank, code, vfine);
      const double amp = osc_amplitude_v(tank.idc_a, tank_rp_ohm(tank, f));
      tuning.add_row({std::to_string(code), format_sci(vfine), format_sci(f),
                      format_sci(amp), format_sci(phase_noise_dbc(pn, f, 1e6))});
    }
  }
  man.emit(dir, "tuning.csv", "csv", tuning.render());

  const double f0 = tune_hz(tank, cfg.dco_code, cfg.dco_vfine);
  CsvTable pncsv({"offset_Hz", "L_dBc_per_Hz"});
  pncsv.add_comment("f0_Hz: " + format_sci(f0));
  const FrequencyGrid offsets(1e3, 1e8, 51, GridSpacing::logarithmic);
  for (std::size_t i = 0; i < offsets.points; ++i) {
    const double df = offsets.at(i);
    pncsv.add_row({format_sci(df), format_sci(phase_noise_dbc(pn, f0, df))});
  }
  man.emit(dir, "phase_noise.csv", "csv", pncsv.render());

  // Synthesized spectrum at 8x the carrier: every tone lands on a bin, so
  // the spur readout is exact.
  const double amp = osc_amplitude_v(tank.idc_a, tank_rp_ohm(tank, f0));
  DcoToneSpec tone{f0, amp, cfg.dco_hd2_dbc, cfg.dco_hd3_dbc};
  const double fs = 8.0 * f0;
  PsdConfig pc = cfg.build_psd(SpectrumReference::peak_relative);
  const std::size_t n = pc.fft_size * std::max<std::size_t>(1, pc.averages);
  const TimeSeries wave = synthesize(tone, fs, n);
  const Spectrum sp = psd(wave, pc);
  const SfdrResult sf =
      sfdr(sp, f0, 16.0 * fs / static_cast<double>(pc.fft_size));

  man.emit(dir, "spectrum.csv", "csv",
           spectrum_csv_text(
               sp, {{"f0_Hz", format_sci(f0)},
                    {"amplitude_V", format_sci(amp)},
                    {"sfdr_dB", format_sci(sf.sfdr_db)},
                    {"sfdr_spur_Hz", format_sci(sf.spur_hz)},
                    {"sfdr_floor_limited", sf.floor_limited ? "1" : "0"},
                    {"pn_1MHz_dBc", format_sci(phase_noise_dbc(pn, f0, 1e6))},
                    {"tune_min_Hz", format_sci(tune_hz(tank, 0, 0.0))},
                    {"tune_max_Hz",
                     format_sci(tune_hz(tank, tank.bank_f.size() - 1, 1.0))}}));
  man.write(dir);
  std::cout << "dco: f0 " << format_sci(f0) << " Hz, amplitude "
            << format_sci(amp) << " V, sfdr " << format_sci(sf.sfdr_db)
            << " dB\n";
  return kExitOk;
}

// --- pulse -----------------------------------------------------------------

int run_pulse(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("pulse", cfg, dir);

  const PulseShaperConfig p = cfg.build_pulse();
  const double fs = cfg.pulse_sample_rate_hz;
  // Transient record: one segment, rectangular window (the pulse is fully
  // inside the record, so the periodogram is the pulse spectrum itself).
  PsdConfig pc;
  pc.window = WindowKind::rectangular;
  pc.fft_size = cfg.psd_fft_size;
  pc.averages = 1;
  const TimeSeries rect = rect_pulse(p, fs, pc.fft_size);
  const TimeSeries shaped = shape_pulse(p, rect);
  const Spectrum rsp = psd(rect, pc);
  const Spectrum ssp = psd(shaped, pc);

  const double rect_band = band_power_db(rsp, 0.9e9, 1.1e9);
  const double shaped_band = band_power_db(ssp, 0.9e9, 1.1e9);
  const double sidelobe =
      band_power_max(rsp, 1.05 / p.width_s, 1.95 / p.width_s);
  double shaped_peak = 0.0;
  for (double v : shaped.samples) shaped_peak = std::max(shaped_peak, v);

  CsvTable wf({"t_s", "rect_V", "shaped_V"});
  const std::size_t nwf = static_cast<std::size_t>(
      std::min<double>(static_cast<double>(rect.samples.size()),
                       std::ceil(4.0 * p.width_s * fs)));
  for (std::size_t i = 0; i < nwf; ++i)
    wf.add_row({format_sci(static_cast<double>(i) / fs),
                format_sci(rect.samples[i]), format_sci(shaped.samples[i])});
  man.emit(dir, "waveform.csv", "csv", wf.render());

  // Standard spectrum format so mask-check can consume these directly.
  man.emit(dir, "spectrum.csv", "csv",
           spectrum_csv_text(ssp, {{"signal", "shaped"},
                                   {"pulse_width_s", format_sci(p.width_s)}}));
  man.emit(dir, "spectrum_rect.csv", "csv",
           spectrum_csv_text(rsp, {{"signal", "rect"},
                                   {"pulse_width_s", format_sci(p.width_s)}}));

  CsvTable summary({"metric", "value"});
  summary.add_row({"rect_band_0p9_1p1GHz_dB", format_sci(rect_band)});
  summary.add_row({"shaped_band_0p9_1p1GHz_dB", format_sci(shaped_band)});
  summary.add_row({"improvement_dB", format_sci(rect_band - shaped_band)});
  summary.add_row({"rise_time_measured_s",
                   format_sci(measured_rise_time_s(shaped))});
  summary.add_row({"rise_time_model_s", format_sci(shaper_rise_time_s(p))});
  summary.add_row({"rect_first_sidelobe_dBr", format_sci(sidelobe)});
  summary.add_row({"shaped_peak_V", format_sci(shaped_peak)});
  summary.add_row({"rect_peak_V", format_sci(p.amplitude_v)});
  man.emit(dir, "summary.csv", "csv", summary.render());
  man.write(dir);
  std::cout << "pulse: band improvement "
            << format_sci(rect_band - shaped_band) << " dB\n";
  return kExitOk;
}

// --- mixer -----------------------------------------------------------------

int run_mixer(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("mixer", cfg, dir);

  const GilbertMixerConfig mix = cfg.build_mixer();
  const double fs = cfg.mixer_sample_rate_hz;
  const double lo = cfg.mixer_lo_hz;
  const double fif = cfg.mixer_if_hz;
  const double drive = cfg.mixer_drive_v;

  PsdConfig pc = cfg.build_psd(SpectrumReference::peak_relative);
  const std::size_t n = pc.fft_size * std::max<std::size_t>(1, pc.averages);
  TimeSeries ifsig;
  ifsig.sample_rate_hz = fs;
  ifsig.samples.resize(n);
  const double w = two_pi * fif / fs;
  for (std::size_t i = 0; i < n; ++i)
    ifsig.samples[i] = drive * std::sin(w * static_cast<double>(i));

  const TimeSeries rf = upconvert(mix, ifsig, lo);
  const Spectrum sp = psd(rf, pc);
  const double df = fs / static_cast<double>(pc.fft_size);
  const double excl = 4.0 * df;

  auto level_at = [&](double f) {
    std::size_t k = static_cast<std::size_t>(
        std::llround((f - sp.freq_hz.front()) / df));
    if (k >= sp.power_db.size()) k = sp.power_db.size() - 1;
    return sp.power_db[k];
  };
  const double principal =
      std::max(level_at(lo - fif), level_at(lo + fif));

  const std::vector<MixerTone> tones =
      mixer_tone_table(mix, drive, fif, lo, 3);
  CsvTable tonecsv(
      {"f_Hz", "level_dBc_model", "lo_order", "if_order", "level_dBc_meas"});
  for (const MixerTone& t : tones) {
    std::string meas;
    if (t.freq_hz < fs / 2.0)
      meas = format_sci(level_at(t.freq_hz) - principal);
    tonecsv.add_row({format_sci(t.freq_hz), format_sci(t.level_dbc),
                     std::to_string(t.lo_order), std::to_string(t.if_order),
                     meas});
  }
  man.emit(dir, "tones.csv", "csv", tonecsv.render());

  const double spur3m = level_at(3.0 * lo - fif) - principal;
  const double spur3p = level_at(3.0 * lo + fif) - principal;
  const SfdrResult inband = pair_sfdr(sp, lo - fif, lo + fif,
                                      lo - 4.5 * fif, lo + 4.5 * fif, excl);
  const double lo_feed = level_at(lo) - principal;
  const double even_zone =
      band_power_max(sp, 2.0 * lo - 2.0 * fif, 2.0 * lo + 2.0 * fif) -
      principal;

  man.emit(dir, "spectrum.csv", "csv",
           spectrum_csv_text(sp, {{"lo_Hz", format_sci(lo)},
                                  {"if_Hz", format_sci(fif)},
                                  {"drive_V", format_sci(drive)}}));

  CsvTable summary({"metric", "value"});
  summary.add_row({"conversion_gain_dB", format_sci(mix.conversion_gain_db)});
  summary.add_row({"a3", format_sci(mix.a3)});
  summary.add_row({"spur_3lo_minus_if_dBc", format_sci(spur3m)});
  summary.add_row({"spur_3lo_plus_if_dBc", format_sci(spur3p)});
  summary.add_row({"sfdr_inband_dB", format_sci(inband.sfdr_db)});
  summary.add_row({"lo_feedthrough_dBc", format_sci(lo_feed)});
  summary.add_row({"even_zone_max_dBc", format_sci(even_zone)});
  man.emit(dir, "summary.csv", "csv", summary.render());
  man.write(dir);
  std::cout << "mixer: 3lo-if spur " << format_sci(spur3m)
            << " dBc, in-band sfdr " << format_sci(inband.sfdr_db) << " dB\n";
  return kExitOk;
}

// --- tx --------------------------------------------------------------------

int run_tx(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("tx", cfg, dir);

  const TxChainConfig txc = cfg.build_tx();
  const TxChainResult res = run_tx_chain(txc);

  const SpectralMask mask = cfg.tx_mask == "builtin"
                                ? builtin_tx_mask()
                                : load_mask(cfg.tx_mask);
  // Transient record: rectangular window, single segment (see run_pulse).
  PsdConfig pc;
  pc.window = WindowKind::rectangular;
  pc.fft_size = cfg.psd_fft_size;
  pc.averages = 1;
  const Spectrum sp = psd(res.rf, pc);
  const MaskReport rep = mask_check(sp, mask);

  std::size_t kpk = 0;
  for (std::size_t k = 1; k < sp.power_db.size(); ++k)
    if (sp.power_db[k] > sp.power_db[kpk]) kpk = k;
  const bool monotone = envelope_monotone_rise(
      res.envelope_v, res.carrier_hz, txc.sample_rate_hz, 0.005);

  CsvTable wf({"t_s", "baseband_V", "shaped_V", "rf_V", "envelope_V"});
  wf.add_comment("carrier_Hz: " + format_sci(res.carrier_hz));
  const double fs = txc.sample_rate_hz;
  const std::size_t nwf = static_cast<std::size_t>(
      std::min<double>(static_cast<double>(res.rf.samples.size()),
                       std::ceil(8.0 * txc.pulse.width_s * fs)));
  for (std::size_t i = 0; i < nwf; ++i)
    wf.add_row({format_sci(static_cast<double>(i) / fs),
                format_sci(res.baseband.samples[i]),
                format_sci(res.shaped.samples[i]),
                format_sci(res.rf.samples[i]),
                format_sci(res.envelope_v[i])});
  man.emit(dir, "waveform.csv", "csv", wf.render());

  man.emit(
      dir, "spectrum.csv", "csv",
      spectrum_csv_text(
          sp,
          {{"carrier_Hz", format_sci(res.carrier_hz)},
           {"peak_Hz", format_sci(sp.freq_hz[kpk])},
           {"carrier_amplitude_V", format_sci(res.carrier_amplitude_v)},
           {"envelope_peak_V", format_sci(res.envelope_peak_v)},
           {"envelope_error_dB", format_sci(res.envelope_error_db)},
           {"envelope_monotone_rise", monotone ? "1" : "0"},
           {"mask_verdict", rep.pass ? "pass" : "fail"},
           {"mask_worst_margin_dB", format_sci(rep.worst_margin_db)}}));

  man.emit(dir, "mask_report.json", "json", mask_report_json(mask, rep));
  man.write(dir);
  std::cout << "tx: peak " << format_sci(sp.freq_hz[kpk]) << " Hz, mask "
            << (rep.pass ? "pass" : "fail") << " (worst margin "
            << format_sci(rep.worst_margin_db) << " dB)\n";
  if (cli.enforce_mask && !rep.pass) return kExitMask;
  return kExitOk;
}

// --- rx --------------------------------------------------------------------

int run_rx(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("rx", cfg, dir);

  const NoiseProfile nfp = cfg.build_nf_profile();
  const GilbertMixerConfig mix = cfg.build_mixer();
  const LnaDesign design = cfg.build_lna();
  const FrequencyGrid grid = cfg.build_grid(cli.points);
  const bool computed_gain = cfg.lna_gain_mode == "computed";

  auto budget_at = [&](double f) {
    const double lna_nf = nf_spot_db(nfp, f);
    const double lna_gain =
        computed_gain ? lna_gain_db(design, f) : cfg.lna_gain_db;
    return friis_cascade({{"lna", lna_nf, lna_gain},
                          {"mixer", mix.nf_db, mix.conversion_gain_db}});
  };

  CsvTable budget({"f_Hz", "lna_nf_dB", "lna_gain_dB", "mixer_nf_dB",
                   "total_nf_dB", "total_gain_dB"});
  const double f_ref = 2.1e9;
  if (f_ref >= nfp.freq_hz.front() && f_ref <= nfp.freq_hz.back())
    budget.add_comment("total_nf_at_2p1GHz_dB: " +
                       format_sci(budget_at(f_ref).back().cum_nf_db));
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double f = grid.at(i);
    const std::vector<CascadeRow> rows = budget_at(f);
    budget.add_row({format_sci(f), format_sci(rows[0].nf_db),
                    format_sci(rows[0].gain_db), format_sci(rows[1].nf_db),
                    format_sci(rows.back().cum_nf_db),
                    format_sci(rows.back().cum_gain_db)});
  }
  man.emit(dir, "budget.csv", "csv", budget.render());

  const PowerSummary ps =
      power_summary(cfg.build_power_blocks(), cfg.power_total_mw);
  CsvTable power({"block", "power_mW"});
  for (const PowerEntry& b : ps.blocks)
    power.add_row({b.name, format_sci(b.mw)});
  power.add_row({"unattributed", format_sci(ps.unattributed_mw)});
  power.add_row({"total", format_sci(ps.total_mw)});
  man.emit(dir, "power.csv", "csv", power.render());
  man.write(dir);
  std::cout << "rx: budget and power tables written\n";
  return kExitOk;
}

// --- mask-check ------------------------------------------------------------

int run_mask_check(const CliOptions& cli) {
  RunConfig cfg = resolve_config(cli);
  const fs::path dir = prepare_out_dir(cli, cfg);
  RunManifest man = start_run("mask-check", cfg, dir);

  const Spectrum sp = load_spectrum_csv(cli.spectrum_path);
  const SpectralMask mask = load_mask(cli.mask_path);
  const MaskReport rep = mask_check(sp, mask);
  man.emit(dir, "mask_report.json", "json", mask_report_json(mask, rep));
  man.write(dir);
  std::cout << "mask-check: " << (rep.pass ? "pass" : "fail")
            << " (worst margin " << format_sci(rep.worst_margin_db)
            << " dB at " << format_sci(rep.worst_freq_hz) << " Hz)\n";
  return rep.pass ? kExitOk : kExitMask;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavioral UWB transceiver chain analysis"};
  app.require_subcommand(1);
  CliOptions cli;
  app.add_option("--config", cli.config_path, "configuration file");
  app.add_option("--out", cli.out_dir, "output directory");
  app.add_option("--points", cli.points, "sweep point count override");
  app.add_flag("--enforce-mask", cli.enforce_mask,
               "nonzero exit when the TX spectrum violates the mask");

  CLI::App* lna = app.add_subcommand("lna", "input match, gain and NF sweep");
  CLI::App* dco = app.add_subcommand("dco", "tuning, phase noise, spectrum");
  CLI::App* pulse = app.add_subcommand("pulse", "pulse shaping analysis");
  CLI::App* mixer = app.add_subcommand("mixer", "upconversion spur analysis");
  CLI::App* tx = app.add_subcommand("tx", "full transmit chain with mask");
  CLI::App* rx = app.add_subcommand("rx", "receive noise budget and power");
  CLI::App* mc = app.add_subcommand("mask-check",
                                    "check a spectrum CSV against a mask");
  mc->add_option("spectrum", cli.spectrum_path, "spectrum CSV file")
      ->required();
  mc->add_option("mask", cli.mask_path, "mask file")->required();
  for (CLI::App* s : {lna, dco, pulse, mixer, tx, rx, mc}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (lna->parsed()) return run_lna(cli);
    if (dco->parsed()) return run_dco(cli);
    if (pulse->parsed()) return run_pulse(cli);
    if (mixer->parsed()) return run_mixer(cli);
    if (tx->parsed()) return run_tx(cli);
    if (rx->parsed()) return run_rx(cli);
    if (mc->parsed()) return run_mask_check(cli);
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::range_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const analysis_error& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitConfig;
}
