#include "echoguard/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "echoguard/errors.hpp"
#include "fft.hpp"

namespace echoguard {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kChirpAmplitude = 0.9;  // headroom against clipping

double hann(std::size_t n, std::size_t length) {
  if (length < 2) return 1.0;
  return 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(n) / static_cast<double>(length - 1)));
}

// Zeroth-order modified Bessel function, series expansion.
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

// Kaiser-windowed sinc bandpass. Transition bands are 2 kHz wide (clamped
// when the band sits close to DC or Nyquist) with a 60 dB design target,
// comfortably past the 40 dB contract.
std::vector<double> design_bandpass_taps(double sample_rate, double f_low, double f_high) {
  const double nyquist = sample_rate / 2.0;
  const double transition =
      std::min({2000.0, f_low, std::max(nyquist - f_high, sample_rate / 256.0)});
  const double attenuation_db = 60.0;
  const double beta = 0.1102 * (attenuation_db - 8.7);
  const double delta_omega = 2.0 * kPi * transition / sample_rate;
  std::size_t n_taps =
      static_cast<std::size_t>(std::ceil((attenuation_db - 8.0) / (2.285 * delta_omega)));
  if (n_taps % 2 == 0) ++n_taps;
  n_taps = std::max<std::size_t>(n_taps, 11);

  // Cutoffs halfway through each transition band keep [f_low, f_high] flat.
  const double w1 = 2.0 * kPi * std::max(f_low - transition / 2.0, 0.0) / sample_rate;
  const double w2 = 2.0 * kPi * std::min(f_high + transition / 2.0, nyquist) / sample_rate;

  const std::size_t mid = n_taps / 2;
  const double i0_beta = bessel_i0(beta);
  std::vector<double> taps(n_taps);
  for (std::size_t n = 0; n < n_taps; ++n) {
    const double k = static_cast<double>(n) - static_cast<double>(mid);
    double ideal;
    if (k == 0.0) {
      ideal = (w2 - w1) / kPi;
    } else {
      ideal = (std::sin(w2 * k) - std::sin(w1 * k)) / (kPi * k);
    }
    const double r = 2.0 * static_cast<double>(n) / static_cast<double>(n_taps - 1) - 1.0;
    const double window = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0_beta;
    taps[n] = ideal * window;
  }
  return taps;
}

void validate_band(double f_low, double f_high, double sample_rate) {
  if (!(f_low > 0.0) || !(f_high > f_low)) {
    throw ConfigError("invalid band: require 0 < f_low < f_high");
  }
  if (f_high > sample_rate / 2.0) {
    throw ConfigError("invalid band: f_high exceeds Nyquist frequency");
  }
}

}  // namespace

void BeepConfig::validate() const {
  if (!(sample_rate_hz > 0.0)) throw ConfigError("sample rate must be positive");
  validate_band(f_low_hz, f_high_hz, sample_rate_hz);
  if (!(duration_s > 0.0)) throw ConfigError("duration must be positive");
  if (interval_s < 0.0) throw ConfigError("interval must be non-negative");
  if (!(speed_of_sound_mps > 0.0)) throw ConfigError("speed of sound must be positive");
}

std::size_t BeepConfig::ping_period_samples() const {
  return static_cast<std::size_t>(std::llround(ping_period_s() * sample_rate_hz));
}

std::size_t BeepConfig::chirp_samples() const {
  return static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
}

BeepConfig BeepConfig::wideband() {
  BeepConfig cfg;
  cfg.f_low_hz = 16000.0;
  return cfg;
}

SampleBuffer generate_chirp(const BeepConfig& config) {
  config.validate();
  const std::size_t n = config.chirp_samples();
  const double slope = (config.f_high_hz - config.f_low_hz) / config.duration_s;
  SampleBuffer out;
  out.sample_rate_hz = config.sample_rate_hz;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / config.sample_rate_hz;
    const double phase = 2.0 * kPi * (config.f_low_hz * t + 0.5 * slope * t * t);
    out.samples[i] = kChirpAmplitude * std::sin(phase) * hann(i, n);
  }
  return out;
}

SampleBuffer bandpass(const SampleBuffer& buffer, double f_low_hz, double f_high_hz) {
  validate_band(f_low_hz, f_high_hz, buffer.sample_rate_hz);
  if (buffer.samples.empty()) return buffer;

  const auto taps = design_bandpass_taps(buffer.sample_rate_hz, f_low_hz, f_high_hz);
  const auto kernel = fftdetail::prepare_kernel(taps, buffer.size());
  SampleBuffer out;
  out.sample_rate_hz = buffer.sample_rate_hz;
  out.samples = fftdetail::filter_prepared(buffer.samples, kernel, taps.size() / 2);
  return out;
}

SampleBuffer build_ping_schedule(const BeepConfig& config, std::size_t n_pings) {
  config.validate();
  if (n_pings < 1) throw ConfigError("n_pings must be at least 1");
  const SampleBuffer chirp = generate_chirp(config);
  const std::size_t period = config.ping_period_samples();
  SampleBuffer out;
  out.sample_rate_hz = config.sample_rate_hz;
  out.samples.assign(n_pings * period, 0.0);
  for (std::size_t p = 0; p < n_pings; ++p) {
    std::copy(chirp.samples.begin(), chirp.samples.end(), out.samples.begin() + p * period);
  }
  return out;
}

}  // namespace echoguard
