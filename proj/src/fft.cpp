#include "fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace chainlab::detail {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

static void check_size(std::size_t n) {
  if (!is_power_of_two(n))
    throw std::domain_error("fft: length must be a power of two");
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
  check_size(x.size());
  const std::size_t n = x.size();
  std::vector<double> in(x);
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      static_cast<int>(n), in.data(),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  if (!plan) throw std::runtime_error("fft: plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x) {
  check_size(x.size());
  const std::size_t n = x.size();
  std::vector<std::complex<double>> half = rfft(x);
  // Zero negative frequencies, double the strictly positive ones, keep DC
  // and Nyquist, then inverse transform.
  std::vector<std::complex<double>> spec(n, {0.0, 0.0});
  spec[0] = half[0];
  for (std::size_t k = 1; k < n / 2; ++k) spec[k] = 2.0 * half[k];
  spec[n / 2] = half[n / 2];
  std::vector<std::complex<double>> out(n);
  fftw_plan plan = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(spec.data()),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
      FFTW_ESTIMATE);
  if (!plan) throw std::runtime_error("fft: plan creation failed");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace chainlab::detail
