#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace echoguard::fftdetail {
namespace {

// FFTW's planner is not thread safe; new-array execution is. Plans are
// created once per size with FFTW_UNALIGNED so they run on plain vectors.
struct PlanCache {
  std::mutex mutex;
  std::map<std::size_t, fftw_plan> r2c;
  std::map<std::size_t, fftw_plan> c2r;
  std::map<std::size_t, fftw_plan> c2c_fwd;
  std::map<std::size_t, fftw_plan> c2c_bwd;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

fftw_plan plan_r2c(std::size_t n) {
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  auto it = c.r2c.find(n);
  if (it != c.r2c.end()) return it->second;
  std::vector<double> in(n);
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan p = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                     reinterpret_cast<fftw_complex*>(out.data()), kPlanFlags);
  c.r2c.emplace(n, p);
  return p;
}

fftw_plan plan_c2r(std::size_t n) {
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  auto it = c.c2r.find(n);
  if (it != c.c2r.end()) return it->second;
  std::vector<std::complex<double>> in(n / 2 + 1);
  std::vector<double> out(n);
  fftw_plan p = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                     out.data(), kPlanFlags);
  c.c2r.emplace(n, p);
  return p;
}

fftw_plan plan_c2c(std::size_t n, bool forward) {
  auto& c = cache();
  std::scoped_lock lock(c.mutex);
  auto& m = forward ? c.c2c_fwd : c.c2c_bwd;
  auto it = m.find(n);
  if (it != m.end()) return it->second;
  std::vector<std::complex<double>> in(n), out(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()),
                                 forward ? FFTW_FORWARD : FFTW_BACKWARD, kPlanFlags);
  m.emplace(n, p);
  return p;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> forward_r2c(const std::vector<double>& x, std::size_t n) {
  std::vector<double> in(n, 0.0);
  std::copy(x.begin(), x.end(), in.begin());
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_execute_dft_r2c(plan_r2c(n), in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<double> inverse_c2r(std::vector<std::complex<double>>& spec, std::size_t n) {
  std::vector<double> out(n);
  fftw_execute_dft_c2r(plan_c2r(n), reinterpret_cast<fftw_complex*>(spec.data()), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<std::complex<double>> in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = x[i];
  fftw_execute_dft(plan_c2c(n, true), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

PreparedKernel prepare_kernel(const std::vector<double>& kernel, std::size_t signal_size) {
  if (kernel.empty()) throw std::invalid_argument("prepare_kernel: empty kernel");
  PreparedKernel pk;
  pk.kernel_size = kernel.size();
  pk.fft_size = next_pow2(signal_size + kernel.size() - 1);
  pk.spectrum = forward_r2c(kernel, pk.fft_size);
  return pk;
}

std::vector<double> correlate_prepared(const std::vector<double>& x, const PreparedKernel& kernel) {
  const std::size_t n = kernel.fft_size;
  auto spec = forward_r2c(x, n);
  for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= std::conj(kernel.spectrum[k]);
  auto full = inverse_c2r(spec, n);
  full.resize(x.size());
  return full;
}

std::vector<double> filter_prepared(const std::vector<double>& x, const PreparedKernel& kernel,
                                    std::size_t delay) {
  const std::size_t n = kernel.fft_size;
  auto spec = forward_r2c(x, n);
  for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= kernel.spectrum[k];
  auto full = inverse_c2r(spec, n);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t j = i + delay;
    out[i] = j < full.size() ? full[j] : 0.0;
  }
  return out;
}

std::vector<double> analytic_envelope(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<std::complex<double>> spec(n), time(n);
  for (std::size_t i = 0; i < n; ++i) time[i] = x[i];
  fftw_execute_dft(plan_c2c(n, true), reinterpret_cast<fftw_complex*>(time.data()),
                   reinterpret_cast<fftw_complex*>(spec.data()));
  // Keep DC (and Nyquist for even n), double positive frequencies, zero the rest.
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) spec[k] *= 2.0;
  for (std::size_t k = half + 1; k < n; ++k) spec[k] = 0.0;
  fftw_execute_dft(plan_c2c(n, false), reinterpret_cast<fftw_complex*>(spec.data()),
                   reinterpret_cast<fftw_complex*>(time.data()));
  std::vector<double> env(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(time[i]) * scale;
  return env;
}

}  // namespace echoguard::fftdetail
