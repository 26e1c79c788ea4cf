#pragma once

// Internal FFT helpers built on FFTW3. Not part of the public API; the
// public contracts live in signal.hpp / correlator.hpp.

#include <complex>
#include <cstddef>
#include <vector>

namespace echoguard::fftdetail {

// Complex forward DFT of a real sequence, length preserved.
std::vector<std::complex<double>> dft(const std::vector<double>& x);

// One-sided spectrum of `kernel` zero-padded to fft_size, for repeated
// convolutions against signals of a known length.
struct PreparedKernel {
  std::size_t fft_size = 0;
  std::size_t kernel_size = 0;
  std::vector<std::complex<double>> spectrum;  // fft_size / 2 + 1 bins
};

PreparedKernel prepare_kernel(const std::vector<double>& kernel, std::size_t signal_size);

// corr[t] = sum_u kernel[u] * x[t + u], t in [0, x.size()).
std::vector<double> correlate_prepared(const std::vector<double>& x, const PreparedKernel& kernel);

// Linear convolution x * kernel trimmed to x.size() starting at `delay`,
// i.e. y[i] = conv[i + delay]. Used for group-delay compensated filtering.
std::vector<double> filter_prepared(const std::vector<double>& x, const PreparedKernel& kernel,
                                    std::size_t delay);

// Magnitude of the analytic signal of x (frequency-domain Hilbert).
std::vector<double> analytic_envelope(const std::vector<double>& x);

}  // namespace echoguard::fftdetail
