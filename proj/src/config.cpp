#include "chainlab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "chainlab/errors.hpp"

namespace chainlab {

// --- value codecs ----------------------------------------------------------

static std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const std::size_t a = s.find_first_not_of(ws);
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

static double parse_double(const std::string& tok) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw config_error("bad numeric value '" + tok + "'");
  return v;
}

static std::size_t parse_size(const std::string& tok) {
  std::size_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw config_error("bad integer value '" + tok + "'");
  return v;
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
  return out;
}

static std::vector<double> parse_double_list(const std::string& tok) {
  std::vector<double> out;
  for (const std::string& t : split(tok, ',')) out.push_back(parse_double(t));
  return out;
}

static std::vector<std::pair<double, double>> parse_pair_list(
    const std::string& tok) {
  std::vector<std::pair<double, double>> out;
  for (const std::string& t : split(tok, ',')) {
    const std::size_t at = t.find(':');
    if (at == std::string::npos)
      throw config_error("expected f:value pair, got '" + t + "'");
    out.emplace_back(parse_double(trim(t.substr(0, at))),
                     parse_double(trim(t.substr(at + 1))));
  }
  return out;
}

static std::string format_exact(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

static std::string format_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_exact(v[i]);
  }
  return out;
}

static std::string format_pairs(
    const std::vector<std::pair<double, double>>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_exact(v[i].first) + ":" + format_exact(v[i].second);
  }
  return out;
}

// --- schema ----------------------------------------------------------------

struct KeyDef {
  const char* name;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

#define NUM_KEY(key, field)                                      \
  KeyDef{key, [](const RunConfig& c) { return format_exact(c.field); }, \
         [](RunConfig& c, const std::string& v) { c.field = parse_double(v); }}
#define SIZE_KEY(key, field)                                     \
  KeyDef{key, [](const RunConfig& c) { return std::to_string(c.field); }, \
         [](RunConfig& c, const std::string& v) { c.field = parse_size(v); }}
#define STR_KEY(key, field)                            \
  KeyDef{key, [](const RunConfig& c) { return c.field; }, \
         [](RunConfig& c, const std::string& v) { c.field = v; }}
#define LIST_KEY(key, field)                                    \
  KeyDef{key, [](const RunConfig& c) { return format_list(c.field); }, \
         [](RunConfig& c, const std::string& v) { c.field = parse_double_list(v); }}

static const std::vector<KeyDef>& schema() {
  static const std::vector<KeyDef> defs = {
      STR_KEY("profile", profile),
      STR_KEY("out", out_dir),
      SIZE_KEY("seed", seed),
      NUM_KEY("lna.l1", lna_l1_h),
      NUM_KEY("lna.c1", lna_c1_f),
      NUM_KEY("lna.l2", lna_l2_h),
      NUM_KEY("lna.c2", lna_c2_f),
      NUM_KEY("lna.lg", lna_lg_h),
      NUM_KEY("lna.ls", lna_ls_h),
      NUM_KEY("lna.c_pad", lna_c_pad_f),
      NUM_KEY("lna.gm", lna_gm_s),
      NUM_KEY("lna.cgs", lna_cgs_f),
      NUM_KEY("lna.cp", lna_cp_f),
      NUM_KEY("lna.ld", lna_ld_h),
      NUM_KEY("lna.rd", lna_rd_ohm),
      NUM_KEY("lna.cout", lna_cout_f),
      NUM_KEY("lna.rs", lna_rs_ohm),
      NUM_KEY("lna.gain_db", lna_gain_db),
      STR_KEY("lna.gain_mode", lna_gain_mode),
      KeyDef{"lna.nf_table",
             [](const RunConfig& c) { return format_pairs(c.lna_nf_table); },
             [](RunConfig& c, const std::string& v) {
               c.lna_nf_table = parse_pair_list(v);
             }},
      NUM_KEY("grid.start_hz", grid_start_hz),
      NUM_KEY("grid.stop_hz", grid_stop_hz),
      SIZE_KEY("grid.points", grid_points),
      STR_KEY("grid.spacing", grid_spacing),
      NUM_KEY("dco.l", dco_l_h),
      NUM_KEY("dco.q", dco_q),
      KeyDef{"dco.idc",
             [](const RunConfig& c) {
               return c.dco_idc_a == 0.0 ? "auto" : format_exact(c.dco_idc_a);
             },
             [](RunConfig& c, const std::string& v) {
               c.dco_idc_a = v == "auto" ? 0.0 : parse_double(v);
             }},
      NUM_KEY("dco.amplitude_v", dco_amplitude_v),
      KeyDef{"dco.bank",
             [](const RunConfig& c) {
               return c.dco_bank_f.empty() ? "auto" : format_list(c.dco_bank_f);
             },
             [](RunConfig& c, const std::string& v) {
               if (v == "auto")
                 c.dco_bank_f.clear();
               else
                 c.dco_bank_f = parse_double_list(v);
             }},
      LIST_KEY("dco.targets_hz", dco_targets_hz),
      NUM_KEY("dco.cmin", dco_cmin_f),
      NUM_KEY("dco.cmax", dco_cmax_f),
      LIST_KEY("dco.cgd", dco_cgd_f),
      LIST_KEY("dco.cgs", dco_cgs_f),
      NUM_KEY("dco.hd2_dbc", dco_hd2_dbc),
      NUM_KEY("dco.hd3_dbc", dco_hd3_dbc),
      SIZE_KEY("dco.code", dco_code),
      NUM_KEY("dco.vfine", dco_vfine),
      NUM_KEY("pn.q", pn_q),
      NUM_KEY("pn.psig_w", pn_psig_w),
      NUM_KEY("pn.corner_hz", pn_corner_hz),
      KeyDef{"pn.noise_factor",
             [](const RunConfig& c) {
               return c.pn_noise_factor == 0.0 ? "auto"
                                               : format_exact(c.pn_noise_factor);
             },
             [](RunConfig& c, const std::string& v) {
               c.pn_noise_factor = v == "auto" ? 0.0 : parse_double(v);
             }},
      NUM_KEY("pn.target_dbc", pn_target_dbc),
      NUM_KEY("pn.target_offset_hz", pn_target_offset_hz),
      NUM_KEY("pulse.width_s", pulse_width_s),
      NUM_KEY("pulse.corner_hz", pulse_corner_hz),
      KeyDef{"pulse.stages",
             [](const RunConfig& c) { return std::to_string(c.pulse_stages); },
             [](RunConfig& c, const std::string& v) {
               c.pulse_stages = static_cast<int>(parse_size(v));
             }},
      NUM_KEY("pulse.amplitude_v", pulse_amplitude_v),
      NUM_KEY("pulse.sample_rate_hz", pulse_sample_rate_hz),
      NUM_KEY("mixer.gain_db", mixer_gain_db),
      NUM_KEY("mixer.nf_db", mixer_nf_db),
      STR_KEY("mixer.lo_model", mixer_lo_model),
      KeyDef{"mixer.a3",
             [](const RunConfig& c) {
               return c.mixer_a3 < 0.0 ? "auto" : format_exact(c.mixer_a3);
             },
             [](RunConfig& c, const std::string& v) {
               c.mixer_a3 = v == "auto" ? -1.0 : parse_double(v);
             }},
      NUM_KEY("mixer.sfdr_db", mixer_sfdr_db),
      NUM_KEY("mixer.drive_v", mixer_drive_v),
      NUM_KEY("mixer.if_hz", mixer_if_hz),
      NUM_KEY("mixer.lo_hz", mixer_lo_hz),
      NUM_KEY("mixer.sample_rate_hz", mixer_sample_rate_hz),
      NUM_KEY("tx.sample_rate_hz", tx_sample_rate_hz),
      SIZE_KEY("tx.samples", tx_samples),
      SIZE_KEY("tx.code", tx_code),
      NUM_KEY("tx.vfine", tx_vfine),
      STR_KEY("tx.mask", tx_mask),
      STR_KEY("psd.window", psd_window),
      SIZE_KEY("psd.fft_size", psd_fft_size),
      SIZE_KEY("psd.averages", psd_averages),
      NUM_KEY("power.dco_mw", power_dco_mw),
      NUM_KEY("power.mixer_mw", power_mixer_mw),
      NUM_KEY("power.lna_mw", power_lna_mw),
      NUM_KEY("power.total_mw", power_total_mw),
  };
  return defs;
}

#undef NUM_KEY
#undef SIZE_KEY
#undef STR_KEY
#undef LIST_KEY

void apply_config_text(RunConfig& cfg, const std::string& text,
                       const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(origin + ":" + std::to_string(lineno) +
                         ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool known = false;
    for (const KeyDef& def : schema()) {
      if (key == def.name) {
        try {
          def.set(cfg, value);
        } catch (const config_error& e) {
          throw config_error(origin + ":" + std::to_string(lineno) + ": " +
                             key + ": " + e.what());
        }
        known = true;
        break;
      }
    }
    if (!known)
      throw config_error(origin + ":" + std::to_string(lineno) +
                         ": unknown config key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path.filename().string());
}

std::string dump_config(const RunConfig& cfg) {
  std::string out;
  for (const KeyDef& def : schema())
    out += std::string(def.name) + " = " + def.get(cfg) + "\n";
  return out;
}

RunConfig default_profile() { return RunConfig{}; }

// --- builders --------------------------------------------------------------

// Attach the config section to any invariant violation raised while
// constructing module objects, so errors point back at config keys.
template <typename Fn>
static auto in_section(const char* section, Fn&& fn) {
  try {
    return fn();
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    throw config_error(std::string(section) + ": " + e.what());
  }
}

LnaDesign RunConfig::build_lna() const {
  return in_section("lna", [&] {
    LnaDesign d;
    d.device = TransistorSmallSignal{lna_gm_s, lna_cgs_f, lna_cp_f};
    d.match = MatchingNetworkSpec{lna_l1_h, lna_c1_f, lna_l2_h, lna_c2_f,
                                  lna_lg_h, lna_ls_h, lna_c_pad_f};
    d.load = LnaLoadSpec{lna_ld_h, lna_rd_ohm, lna_cout_f};
    d.rs_ohm = lna_rs_ohm;
    if (lna_gain_mode != "fixed" && lna_gain_mode != "computed")
      throw config_error("lna.gain_mode must be 'fixed' or 'computed'");
    // Exercise the validating paths once so bad values fail here.
    (void)lna_input_impedance(d, 1e9);
    (void)d.load.impedance(1e9);
    return d;
  });
}

NoiseProfile RunConfig::build_nf_profile() const {
  return in_section("lna.nf_table", [&] {
    NoiseProfile p;
    for (const auto& [f, nf] : lna_nf_table) {
      p.freq_hz.push_back(f);
      p.nf_db.push_back(nf);
    }
    (void)nf_spot_db(p, p.freq_hz.empty() ? 1.0 : p.freq_hz.front());
    return p;
  });
}

FrequencyGrid RunConfig::build_grid(std::size_t points_override) const {
  return in_section("grid", [&] {
    GridSpacing sp;
    if (grid_spacing == "linear")
      sp = GridSpacing::linear;
    else if (grid_spacing == "log")
      sp = GridSpacing::logarithmic;
    else
      throw config_error("grid.spacing must be 'linear' or 'log'");
    return FrequencyGrid(grid_start_hz, grid_stop_hz,
                         points_override ? points_override : grid_points, sp);
  });
}

TankConfig RunConfig::build_tank() const {
  return in_section("dco", [&] {
    if (dco_cgd_f.size() != 4 || dco_cgs_f.size() != 4)
      throw config_error("dco.cgd and dco.cgs need exactly 4 values");
    TankConfig t;
    t.l_h = dco_l_h;
    t.q = dco_q;
    t.idc_a = 1e-3;  // placeholder until the bank exists
    t.varactor = VaractorSpec{dco_cmin_f, dco_cmax_f};
    t.parasitics = CrossCoupledParasitics{
        dco_cgd_f[0], dco_cgs_f[0], dco_cgd_f[1], dco_cgs_f[1],
        dco_cgd_f[2], dco_cgs_f[2], dco_cgd_f[3], dco_cgs_f[3]};
    t.bank_f = dco_bank_f;
    if (t.bank_f.empty()) t.bank_f = solve_bank_f(t, dco_targets_hz);
    if (dco_idc_a > 0.0) {
      t.idc_a = dco_idc_a;
    } else {
      // Back-solve the bias for the rated swing at the top tuning target.
      const double f_top = tune_hz(t, t.bank_f.size() - 1, 0.5);
      t.idc_a = bias_for_amplitude_a(dco_amplitude_v, tank_rp_ohm(t, f_top));
    }
    validate(t);
    return t;
  });
}

PhaseNoiseModel RunConfig::build_phase_noise() const {
  return in_section("pn", [&] {
    PhaseNoiseModel m{pn_q, pn_psig_w, pn_corner_hz, pn_noise_factor};
    if (m.noise_factor <= 0.0) {
      const double f_top = dco_targets_hz.empty() ? 6e9 : dco_targets_hz.back();
      m.noise_factor = calibrate_noise_factor(m, f_top, pn_target_offset_hz,
                                              pn_target_dbc);
    }
    (void)phase_noise_dbc(m, 6e9, 1e6);
    return m;
  });
}

PulseShaperConfig RunConfig::build_pulse() const {
  return in_section("pulse", [&] {
    PulseShaperConfig p{pulse_width_s, pulse_amplitude_v, pulse_corner_hz,
                        pulse_stages};
    validate(p);
    return p;
  });
}

GilbertMixerConfig RunConfig::build_mixer() const {
  return in_section("mixer", [&] {
    GilbertMixerConfig m;
    m.conversion_gain_db = mixer_gain_db;
    m.nf_db = mixer_nf_db;
    m.lo_model = lo_model_from_string(mixer_lo_model);
    m.a3 = mixer_a3 >= 0.0 ? mixer_a3
                           : calibrate_a3(mixer_sfdr_db, mixer_drive_v);
    validate(m);
    return m;
  });
}

PsdConfig RunConfig::build_psd(SpectrumReference ref) const {
  return in_section("psd", [&] {
    PsdConfig p;
    p.window = window_from_string(psd_window);
    p.fft_size = psd_fft_size;
    p.averages = psd_averages;
    p.reference = ref;
    return p;
  });
}

TxChainConfig RunConfig::build_tx() const {
  TxChainConfig t;
  t.pulse = build_pulse();
  t.mixer = build_mixer();
  t.tank = build_tank();
  return in_section("tx", [&] {
    t.hd2_dbc = dco_hd2_dbc;
    t.hd3_dbc = dco_hd3_dbc;
    t.code = tx_code;
    t.vfine = tx_vfine;
    t.sample_rate_hz = tx_sample_rate_hz;
    t.samples = tx_samples;
    if (t.code >= t.tank.bank_f.size())
      throw config_error("tx.code outside the capacitor bank range");
    return t;
  });
}

std::vector<PowerEntry> RunConfig::build_power_blocks() const {
  return in_section("power", [&] {
    return std::vector<PowerEntry>{{"dco", power_dco_mw},
                                   {"mixer", power_mixer_mw},
                                   {"lna", power_lna_mw}};
  });
}

}  // namespace chainlab
