#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace chainlab {

using complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Boltzmann constant and the standard noise reference temperature.
inline constexpr double boltzmann_k = 1.380649e-23;  // J/K
inline constexpr double noise_temp_k = 290.0;

// Log-magnitude floors.  Spectra are clamped at -300 dB (numerical floor for
// double-precision power ratios); reflection magnitudes at -120 dB so a
// perfect match stays finite.
inline constexpr double spectrum_floor_db = -300.0;
inline constexpr double gamma_floor_db = -120.0;

enum class DbKind { power, amplitude };

// 10*log10 (power) or 20*log10 (amplitude).  Throws std::domain_error for
// ratio <= 0; use db_clamped when a zero must map to a finite floor.
double db_from_ratio(double ratio, DbKind kind);
double ratio_from_db(double db, DbKind kind);
double db_clamped(double ratio, DbKind kind, double floor_db);

enum class GridSpacing { linear, logarithmic };

// Evaluation grid for frequency sweeps.  Endpoints are reproduced exactly;
// interior points are linear or geometric between them.
struct FrequencyGrid {
  double start_hz;
  double stop_hz;
  std::size_t points;
  GridSpacing spacing;

  FrequencyGrid(double start, double stop, std::size_t n,
                GridSpacing s = GridSpacing::linear);

  double at(std::size_t i) const;
  std::vector<double> frequencies() const;
};

// Voltage reflection coefficient of impedance z against reference z0.
// Throws std::domain_error for z0 <= 0 or z == -z0.
complex reflection_coefficient(complex z, double z0);

// |gamma| in dB, clamped at gamma_floor_db so a perfect match is finite.
double s11_db(complex gamma);

// Uniformly sampled real waveform.
struct TimeSeries {
  double sample_rate_hz = 0.0;
  std::vector<double> samples;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Throws std::domain_error unless fs > 0 and the series is non-empty.
void validate(const TimeSeries& ts);

enum class SpectrumReference { peak_relative, absolute_dbm };

// One-sided power spectrum.  peak_relative spectra have max(power_db) == 0
// exactly; absolute spectra are dBm in a declared resolution bandwidth.
struct Spectrum {
  std::vector<double> freq_hz;   // strictly increasing
  std::vector<double> power_db;  // same length
  SpectrumReference reference = SpectrumReference::peak_relative;
};

void validate(const Spectrum& s);

const char* to_string(SpectrumReference r);
SpectrumReference spectrum_reference_from_string(const std::string& s);

}  // namespace chainlab
