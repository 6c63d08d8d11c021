#include "chainlab/rfcore.hpp"

#include <cmath>
#include <stdexcept>

#include "chainlab/errors.hpp"

namespace chainlab {

static double db_scale(DbKind kind) {
  return kind == DbKind::power ? 10.0 : 20.0;
}

double db_from_ratio(double ratio, DbKind kind) {
  if (!(ratio > 0.0))
    throw std::domain_error("db_from_ratio: ratio must be > 0");
  return db_scale(kind) * std::log10(ratio);
}

double ratio_from_db(double db, DbKind kind) {
  return std::pow(10.0, db / db_scale(kind));
}

double db_clamped(double ratio, DbKind kind, double floor_db) {
  if (ratio < 0.0)
    throw std::domain_error("db_clamped: ratio must be >= 0");
  if (ratio == 0.0) return floor_db;
  double db = db_scale(kind) * std::log10(ratio);
  return db < floor_db ? floor_db : db;
}

FrequencyGrid::FrequencyGrid(double start, double stop, std::size_t n,
                             GridSpacing s)
    : start_hz(start), stop_hz(stop), points(n), spacing(s) {
  if (!(start > 0.0))
    throw std::domain_error("FrequencyGrid: start must be > 0");
  if (!(stop > start))
    throw std::domain_error("FrequencyGrid: stop must exceed start");
  if (n < 2) throw std::domain_error("FrequencyGrid: need at least 2 points");
}

double FrequencyGrid::at(std::size_t i) const {
  if (i >= points) throw std::range_error("FrequencyGrid: index out of range");
  if (i == 0) return start_hz;
  if (i == points - 1) return stop_hz;
  double t = static_cast<double>(i) / static_cast<double>(points - 1);
  if (spacing == GridSpacing::linear)
    return start_hz + (stop_hz - start_hz) * t;
  return std::exp(std::log(start_hz) +
                  (std::log(stop_hz) - std::log(start_hz)) * t);
}

std::vector<double> FrequencyGrid::frequencies() const {
  std::vector<double> f(points);
  for (std::size_t i = 0; i < points; ++i) f[i] = at(i);
  return f;
}

complex reflection_coefficient(complex z, double z0) {
  if (!(z0 > 0.0))
    throw std::domain_error("reflection_coefficient: z0 must be > 0");
  complex den = z + z0;
  if (std::abs(den) == 0.0)
    throw std::domain_error("reflection_coefficient: z == -z0");
  return (z - z0) / den;
}

double s11_db(complex gamma) {
  return db_clamped(std::abs(gamma), DbKind::amplitude, gamma_floor_db);
}

void validate(const TimeSeries& ts) {
  if (!(ts.sample_rate_hz > 0.0))
    throw std::domain_error("TimeSeries: sample rate must be > 0");
  if (ts.samples.empty())
    throw std::domain_error("TimeSeries: no samples");
}

void validate(const Spectrum& s) {
  if (s.freq_hz.size() != s.power_db.size() || s.freq_hz.empty())
    throw std::domain_error("Spectrum: frequency/power length mismatch");
  for (std::size_t i = 1; i < s.freq_hz.size(); ++i)
    if (!(s.freq_hz[i] > s.freq_hz[i - 1]))
      throw std::domain_error("Spectrum: frequencies must strictly increase");
}

const char* to_string(SpectrumReference r) {
  return r == SpectrumReference::peak_relative ? "peak_relative"
                                               : "absolute_dbm";
}

SpectrumReference spectrum_reference_from_string(const std::string& s) {
  if (s == "peak_relative") return SpectrumReference::peak_relative;
  if (s == "absolute_dbm") return SpectrumReference::absolute_dbm;
  throw config_error("unknown spectrum reference '" + s + "'");
}

}  // namespace chainlab
