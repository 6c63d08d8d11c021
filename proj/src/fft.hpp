#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chainlab::detail {

// Forward real-to-complex DFT; returns n/2 + 1 bins (unnormalized, FFTW
// convention).  n must be a power of two.
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

// Discrete analytic signal via the frequency-domain Hilbert construction;
// |result| is the envelope.  n must be a power of two.
std::vector<std::complex<double>> analytic_signal(const std::vector<double>& x);

bool is_power_of_two(std::size_t n);

}  // namespace chainlab::detail
