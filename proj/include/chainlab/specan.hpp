#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "chainlab/rfcore.hpp"

namespace chainlab {

// ---------------------------------------------------------------------------
// Welch-averaged power spectrum.
// ---------------------------------------------------------------------------

enum class WindowKind { rectangular, hann, blackman };

const char* to_string(WindowKind w);
WindowKind window_from_string(const std::string& s);

struct PsdConfig {
  WindowKind window = WindowKind::hann;
  std::size_t fft_size = 1 << 16;  // power of two
  std::size_t averages = 4;        // >= 1 overlapping segments
  SpectrumReference reference = SpectrumReference::peak_relative;
  // Used only for the absolute reference: per-bin mean-square voltage is
  // converted to dBm across r_ohms in the declared resolution bandwidth.
  double r_ohms = 50.0;
  double rbw_hz = 1e6;
};

// One-sided Welch spectrum with window power compensation.  Segments are
// spread deterministically over the record: hop = (n - nfft)/(averages - 1).
// Requires the record to be at least fft_size samples long.
Spectrum psd(const TimeSeries& ts, const PsdConfig& cfg);

// ---------------------------------------------------------------------------
// Scalar spectrum metrics.
// ---------------------------------------------------------------------------

struct SfdrResult {
  double sfdr_db;       // carrier peak minus worst spur, in dB
  double carrier_hz;    // bin where the carrier was read
  double spur_hz;       // bin of the worst spur
  bool floor_limited;   // spur sat at the numerical floor
};

// Carrier is read as the largest bin within +-exclusion_hz of carrier_hz;
// the spur search covers everything outside that exclusion window.
SfdrResult sfdr(const Spectrum& s, double carrier_hz, double exclusion_hz);

// Total power over [f_lo, f_hi] (inclusive), in the spectrum's reference
// units.  Throws std::range_error if no bins fall inside.
double band_power_db(const Spectrum& s, double f_lo_hz, double f_hi_hz);

// Largest bin over [f_lo, f_hi] (inclusive), same units and same
// empty-band behavior as band_power_db.
double band_power_max(const Spectrum& s, double f_lo_hz, double f_hi_hz);

// SFDR for a two-tone principal (e.g. a mixer's lo-if / lo+if pair): the
// stronger principal bin against the worst other bin in [band_lo, band_hi],
// excluding +-exclusion_hz around each principal.
SfdrResult pair_sfdr(const Spectrum& s, double f_a_hz, double f_b_hz,
                     double band_lo_hz, double band_hi_hz,
                     double exclusion_hz);

// ---------------------------------------------------------------------------
// Spectral masks.
// ---------------------------------------------------------------------------

struct MaskSegment {
  double f_lo_hz;
  double f_hi_hz;
  double limit_db;
};

struct SpectralMask {
  std::string name;
  SpectrumReference reference = SpectrumReference::peak_relative;
  std::vector<MaskSegment> segments;  // sorted, non-overlapping
};

void validate(const SpectralMask& m);

struct SegmentResult {
  MaskSegment segment;
  bool evaluated;        // false if no spectrum bins fall in the segment
  double margin_db;      // limit - worst bin (evaluated segments only)
  double worst_freq_hz;
};

struct MaskReport {
  bool pass;
  double worst_margin_db;
  double worst_freq_hz;
  std::vector<SegmentResult> segments;
};

// Checks each mask segment against the spectrum.  The spectrum and mask must
// share a reference kind (config_error otherwise); at least one segment must
// be evaluable (analysis_error otherwise).
MaskReport mask_check(const Spectrum& s, const SpectralMask& m);

// Shipped illustrative masks (peak-relative).  The RF mask follows the
// outdoor UWB emission shape re-referenced to the passband; the baseband
// mask bounds pulse energy beyond the signal band.  The files under data/
// mirror these exactly.
SpectralMask builtin_tx_mask();
SpectralMask builtin_pulse_mask();

// Plain-text mask files; numeric values round-trip bit exactly.
SpectralMask load_mask(const std::filesystem::path& path);
void save_mask(const SpectralMask& m, const std::filesystem::path& path);
std::string mask_text(const SpectralMask& m);

// Spectrum CSV (f_Hz, p_dB).  The reference kind and any extra metadata ride
// as leading "# key: value" comment lines so a round trip preserves the
// mask-compatibility information.
std::string spectrum_csv_text(
    const Spectrum& s,
    const std::vector<std::pair<std::string, std::string>>& metadata = {});
Spectrum load_spectrum_csv(const std::filesystem::path& path);

}  // namespace chainlab
