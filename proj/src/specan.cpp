#include "chainlab/specan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chainlab/errors.hpp"
#include "fft.hpp"

namespace chainlab {

const char* to_string(WindowKind w) {
  switch (w) {
    case WindowKind::rectangular: return "rectangular";
    case WindowKind::hann: return "hann";
    case WindowKind::blackman: return "blackman";
  }
  return "?";
}

WindowKind window_from_string(const std::string& s) {
  if (s == "rectangular") return WindowKind::rectangular;
  if (s == "hann") return WindowKind::hann;
  if (s == "blackman") return WindowKind::blackman;
  throw config_error("unknown window '" + s + "'");
}

static std::vector<double> make_window(WindowKind kind, std::size_t n) {
  std::vector<double> w(n, 1.0);
  const double step = two_pi / static_cast<double>(n);  // periodic windows
  switch (kind) {
    case WindowKind::rectangular:
      break;
    case WindowKind::hann:
      for (std::size_t i = 0; i < n; ++i)
        w[i] = 0.5 - 0.5 * std::cos(step * static_cast<double>(i));
      break;
    case WindowKind::blackman:
      for (std::size_t i = 0; i < n; ++i) {
        const double t = step * static_cast<double>(i);
        w[i] = 0.42 - 0.5 * std::cos(t) + 0.08 * std::cos(2.0 * t);
      }
      break;
  }
  return w;
}

Spectrum psd(const TimeSeries& ts, const PsdConfig& cfg) {
  validate(ts);
  if (!detail::is_power_of_two(cfg.fft_size))
    throw std::domain_error("psd: fft_size must be a power of two");
  if (cfg.averages < 1)
    throw std::domain_error("psd: averages must be >= 1");
  const std::size_t n = ts.samples.size();
  const std::size_t nfft = cfg.fft_size;
  if (n < nfft)
    throw std::range_error("psd: record shorter than fft_size");

  // Deterministic segment placement across the whole record.
  std::vector<std::size_t> starts;
  if (cfg.averages == 1) {
    starts.push_back(0);
  } else {
    const std::size_t hop = (n - nfft) / (cfg.averages - 1);
    for (std::size_t k = 0; k < cfg.averages; ++k) starts.push_back(k * hop);
  }

  const std::vector<double> w = make_window(cfg.window, nfft);
  double u = 0.0;  // window power compensation, mean(w^2)
  for (double v : w) u += v * v;
  u /= static_cast<double>(nfft);

  const std::size_t bins = nfft / 2 + 1;
  std::vector<double> acc(bins, 0.0);
  std::vector<double> seg(nfft);
  for (std::size_t s : starts) {
    for (std::size_t i = 0; i < nfft; ++i) seg[i] = ts.samples[s + i] * w[i];
    std::vector<complex> spec = detail::rfft(seg);
    const double norm =
        1.0 / (static_cast<double>(nfft) * static_cast<double>(nfft) * u);
    for (std::size_t k = 0; k < bins; ++k) {
      double p = std::norm(spec[k]) * norm;
      if (k != 0 && k != bins - 1) p *= 2.0;  // one-sided
      acc[k] += p;
    }
  }
  for (double& p : acc) p /= static_cast<double>(starts.size());

  Spectrum out;
  out.reference = cfg.reference;
  out.freq_hz.resize(bins);
  out.power_db.resize(bins);
  const double df = ts.sample_rate_hz / static_cast<double>(nfft);
  for (std::size_t k = 0; k < bins; ++k)
    out.freq_hz[k] = df * static_cast<double>(k);

  if (cfg.reference == SpectrumReference::peak_relative) {
    const double pmax = *std::max_element(acc.begin(), acc.end());
    if (!(pmax > 0.0)) throw analysis_error("psd: all-zero spectrum");
    for (std::size_t k = 0; k < bins; ++k)
      out.power_db[k] =
          db_clamped(acc[k] / pmax, DbKind::power, spectrum_floor_db);
  } else {
    if (!(cfg.r_ohms > 0.0))
      throw std::domain_error("psd: absolute mode needs r_ohms > 0");
    if (!(cfg.rbw_hz > 0.0))
      throw std::domain_error("psd: absolute mode needs rbw_hz > 0");
    // Mean-square volts per bin -> watts -> power in the declared RBW.
    const double scale = cfg.rbw_hz / df / (cfg.r_ohms * 1e-3);
    for (std::size_t k = 0; k < bins; ++k)
      out.power_db[k] =
          db_clamped(acc[k] * scale, DbKind::power, spectrum_floor_db);
  }
  return out;
}

// Nearest bin; assumes a uniform grid, which psd produces.
static std::size_t bin_of(const Spectrum& s, double f) {
  const double df = s.freq_hz.size() > 1 ? s.freq_hz[1] - s.freq_hz[0] : 1.0;
  double idx = (f - s.freq_hz.front()) / df;
  if (idx < 0.0) idx = 0.0;
  std::size_t k = static_cast<std::size_t>(std::llround(idx));
  if (k >= s.freq_hz.size()) k = s.freq_hz.size() - 1;
  return k;
}

SfdrResult sfdr(const Spectrum& s, double carrier_hz, double exclusion_hz) {
  validate(s);
  if (!(exclusion_hz > 0.0))
    throw std::domain_error("sfdr: exclusion width must be > 0");
  if (carrier_hz < s.freq_hz.front() || carrier_hz > s.freq_hz.back())
    throw std::range_error("sfdr: carrier outside spectrum span");

  const double df = s.freq_hz.size() > 1 ? s.freq_hz[1] - s.freq_hz[0] : 1.0;
  const std::size_t half =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(exclusion_hz / df)));
  const std::size_t kc = bin_of(s, carrier_hz);

  std::size_t k_car = kc;
  const std::size_t lo = kc > half ? kc - half : 0;
  const std::size_t hi = std::min(s.power_db.size() - 1, kc + half);
  for (std::size_t k = lo; k <= hi; ++k)
    if (s.power_db[k] > s.power_db[k_car]) k_car = k;

  // Worst bin anywhere outside the exclusion window around the carrier,
  // also skipping the DC leakage skirt.
  double spur_db = spectrum_floor_db;
  std::size_t k_spur = 0;
  bool found = false;
  for (std::size_t k = 0; k < s.power_db.size(); ++k) {
    const std::size_t d = k > k_car ? k - k_car : k_car - k;
    if (d <= half) continue;
    if (k <= half) continue;  // DC skirt
    if (!found || s.power_db[k] > spur_db) {
      spur_db = s.power_db[k];
      k_spur = k;
      found = true;
    }
  }
  if (!found) throw analysis_error("sfdr: no bins outside carrier window");

  SfdrResult r;
  r.sfdr_db = s.power_db[k_car] - spur_db;
  r.carrier_hz = s.freq_hz[k_car];
  r.spur_hz = s.freq_hz[k_spur];
  r.floor_limited = spur_db <= spectrum_floor_db + 1.0;
  return r;
}

SfdrResult pair_sfdr(const Spectrum& s, double f_a_hz, double f_b_hz,
                     double band_lo_hz, double band_hi_hz,
                     double exclusion_hz) {
  validate(s);
  if (!(exclusion_hz > 0.0))
    throw std::domain_error("pair_sfdr: exclusion width must be > 0");
  if (!(band_hi_hz > band_lo_hz))
    throw std::domain_error("pair_sfdr: empty band");
  const std::size_t ka = bin_of(s, f_a_hz);
  const std::size_t kb = bin_of(s, f_b_hz);
  const double carrier_db = std::max(s.power_db[ka], s.power_db[kb]);
  const std::size_t k_car = s.power_db[ka] >= s.power_db[kb] ? ka : kb;

  double spur_db = spectrum_floor_db;
  std::size_t k_spur = 0;
  bool found = false;
  for (std::size_t k = 0; k < s.freq_hz.size(); ++k) {
    const double f = s.freq_hz[k];
    if (f < band_lo_hz || f > band_hi_hz) continue;
    if (std::abs(f - s.freq_hz[ka]) <= exclusion_hz) continue;
    if (std::abs(f - s.freq_hz[kb]) <= exclusion_hz) continue;
    if (!found || s.power_db[k] > spur_db) {
      spur_db = s.power_db[k];
      k_spur = k;
      found = true;
    }
  }
  if (!found)
    throw analysis_error("pair_sfdr: no candidate bins inside the band");
  SfdrResult r;
  r.sfdr_db = carrier_db - spur_db;
  r.carrier_hz = s.freq_hz[k_car];
  r.spur_hz = s.freq_hz[k_spur];
  r.floor_limited = spur_db <= spectrum_floor_db + 1.0;
  return r;
}

double band_power_db(const Spectrum& s, double f_lo_hz, double f_hi_hz) {
  validate(s);
  if (!(f_hi_hz > f_lo_hz))
    throw std::domain_error("band_power_db: empty band");
  double sum = 0.0;
  bool any = false;
  for (std::size_t k = 0; k < s.freq_hz.size(); ++k) {
    if (s.freq_hz[k] < f_lo_hz || s.freq_hz[k] > f_hi_hz) continue;
    sum += ratio_from_db(s.power_db[k], DbKind::power);
    any = true;
  }
  if (!any)
    throw std::range_error("band_power_db: no bins inside the band");
  return db_clamped(sum, DbKind::power, spectrum_floor_db);
}

double band_power_max(const Spectrum& s, double f_lo_hz, double f_hi_hz) {
  validate(s);
  if (!(f_hi_hz > f_lo_hz))
    throw std::domain_error("band_power_max: empty band");
  double best = spectrum_floor_db;
  bool any = false;
  for (std::size_t k = 0; k < s.freq_hz.size(); ++k) {
    if (s.freq_hz[k] < f_lo_hz || s.freq_hz[k] > f_hi_hz) continue;
    if (!any || s.power_db[k] > best) best = s.power_db[k];
    any = true;
  }
  if (!any)
    throw std::range_error("band_power_max: no bins inside the band");
  return best;
}

void validate(const SpectralMask& m) {
  if (m.segments.empty())
    throw std::domain_error("SpectralMask: no segments");
  for (const MaskSegment& seg : m.segments) {
    if (!(seg.f_lo_hz >= 0.0) || !(seg.f_hi_hz > seg.f_lo_hz))
      throw std::domain_error("SpectralMask: bad segment bounds");
  }
  // Segments must tile the mask's domain: sorted, no overlap, no gaps.
  for (std::size_t i = 1; i < m.segments.size(); ++i)
    if (m.segments[i].f_lo_hz != m.segments[i - 1].f_hi_hz)
      throw std::domain_error(
          "SpectralMask: segments must tile contiguously in order");
}

MaskReport mask_check(const Spectrum& s, const SpectralMask& m) {
  validate(s);
  validate(m);
  if (s.reference != m.reference)
    throw config_error(
        std::string("mask_check: spectrum reference '") + to_string(s.reference) +
        "' does not match mask reference '" + to_string(m.reference) + "'");

  MaskReport rep;
  rep.pass = true;
  rep.worst_margin_db = 0.0;
  rep.worst_freq_hz = 0.0;
  bool have_worst = false;
  for (const MaskSegment& seg : m.segments) {
    SegmentResult sr;
    sr.segment = seg;
    sr.evaluated = false;
    sr.margin_db = 0.0;
    sr.worst_freq_hz = 0.0;
    for (std::size_t k = 0; k < s.freq_hz.size(); ++k) {
      if (s.freq_hz[k] < seg.f_lo_hz || s.freq_hz[k] > seg.f_hi_hz) continue;
      const double margin = seg.limit_db - s.power_db[k];
      if (!sr.evaluated || margin < sr.margin_db) {
        sr.margin_db = margin;
        sr.worst_freq_hz = s.freq_hz[k];
      }
      sr.evaluated = true;
    }
    if (sr.evaluated) {
      if (!have_worst || sr.margin_db < rep.worst_margin_db) {
        rep.worst_margin_db = sr.margin_db;
        rep.worst_freq_hz = sr.worst_freq_hz;
        have_worst = true;
      }
      if (sr.margin_db < 0.0) rep.pass = false;
    }
    rep.segments.push_back(sr);
  }
  if (!have_worst)
    throw analysis_error("mask_check: no mask segment overlaps the spectrum");
  return rep;
}

SpectralMask builtin_tx_mask() {
  SpectralMask m;
  m.name = "UWB outdoor emission shape, peak-relative (illustrative)";
  m.reference = SpectrumReference::peak_relative;
  m.segments = {
      {0.96e9, 1.61e9, -34.0}, {1.61e9, 1.99e9, -22.0},
      {1.99e9, 3.1e9, -20.0},  {3.1e9, 10.6e9, 0.0},
      {10.6e9, 24e9, -20.0},
  };
  return m;
}

SpectralMask builtin_pulse_mask() {
  SpectralMask m;
  m.name = "baseband pulse confinement, peak-relative (illustrative)";
  m.reference = SpectrumReference::peak_relative;
  m.segments = {{1.0e9, 8e9, -40.0}};
  return m;
}

// --- mask files ------------------------------------------------------------

static std::string format_exact(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

static double parse_double_exact(const std::string& tok, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw config_error(std::string("mask file: bad ") + what + " '" + tok + "'");
  return v;
}

SpectralMask load_mask(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("mask file: cannot open " + path.string());
  SpectralMask m;
  bool have_ref = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "name") {
      std::string rest;
      std::getline(ls, rest);
      const std::size_t at = rest.find_first_not_of(" \t");
      m.name = at == std::string::npos ? "" : rest.substr(at);
    } else if (key == "reference") {
      std::string ref;
      ls >> ref;
      m.reference = spectrum_reference_from_string(ref);
      have_ref = true;
    } else if (key == "segment") {
      std::string a, b, c;
      ls >> a >> b >> c;
      if (c.empty())
        throw config_error("mask file: segment needs f_lo f_hi limit");
      MaskSegment seg;
      seg.f_lo_hz = parse_double_exact(a, "segment start");
      seg.f_hi_hz = parse_double_exact(b, "segment stop");
      seg.limit_db = parse_double_exact(c, "segment limit");
      m.segments.push_back(seg);
    } else {
      throw config_error("mask file: unknown directive '" + key + "'");
    }
  }
  if (!have_ref) throw config_error("mask file: missing reference line");
  validate(m);
  return m;
}

std::string mask_text(const SpectralMask& m) {
  validate(m);
  std::ostringstream out;
  out << "# spectral mask\n";
  out << "name " << m.name << "\n";
  out << "reference " << to_string(m.reference) << "\n";
  for (const MaskSegment& seg : m.segments)
    out << "segment " << format_exact(seg.f_lo_hz) << " "
        << format_exact(seg.f_hi_hz) << " " << format_exact(seg.limit_db)
        << "\n";
  return out.str();
}

void save_mask(const SpectralMask& m, const std::filesystem::path& path) {
  std::string text = mask_text(m);
  std::ofstream f(path);
  if (!f) throw config_error("mask file: cannot write " + path.string());
  f << text;
  if (!f) throw config_error("mask file: write failed for " + path.string());
}

// --- spectrum CSV ----------------------------------------------------------

std::string spectrum_csv_text(
    const Spectrum& s,
    const std::vector<std::pair<std::string, std::string>>& metadata) {
  validate(s);
  std::ostringstream out;
  out << "# reference: " << to_string(s.reference) << "\n";
  for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
  out << "f_Hz,p_dB\n";
  char buf[96];
  for (std::size_t i = 0; i < s.freq_hz.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.8e,%.8e\n", s.freq_hz[i],
                  s.power_db[i]);
    out << buf;
  }
  return out.str();
}

Spectrum load_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("spectrum file: cannot open " + path.string());
  Spectrum s;
  bool have_header = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# reference:";
      if (line.compare(0, tag.size(), tag) == 0) {
        std::string v = line.substr(tag.size());
        const std::size_t at = v.find_first_not_of(" \t");
        s.reference = spectrum_reference_from_string(
            at == std::string::npos ? "" : v.substr(at));
      }
      continue;
    }
    if (!have_header) {  // column header row
      have_header = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw config_error("spectrum file: expected 'f,p' row in " +
                         path.string());
    s.freq_hz.push_back(
        parse_double_exact(line.substr(0, comma), "frequency"));
    std::string p = line.substr(comma + 1);
    while (!p.empty() && (p.back() == '\r' || p.back() == '\n')) p.pop_back();
    s.power_db.push_back(parse_double_exact(p, "power"));
  }
  validate(s);
  return s;
}

}  // namespace chainlab
