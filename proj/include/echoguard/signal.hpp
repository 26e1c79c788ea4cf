#pragma once

#include <cstddef>
#include <vector>

namespace echoguard {

/// Transmit-side configuration: chirp band, timing and the physical
/// constants used to convert sample delays into distances.
struct BeepConfig {
  double f_low_hz = 18000.0;
  double f_high_hz = 23000.0;
  double duration_s = 0.050;
  double interval_s = 0.040;  // silence after each chirp
  double sample_rate_hz = 192000.0;
  double speed_of_sound_mps = 343.0;

  /// Throws ConfigError unless 0 < f_low < f_high <= Nyquist,
  /// duration > 0, interval >= 0 and speed_of_sound > 0.
  void validate() const;

  double ping_period_s() const { return duration_s + interval_s; }
  std::size_t ping_period_samples() const;
  std::size_t chirp_samples() const;

  /// Distance of echo path covered by one sample delay (v / f), meters.
  double path_resolution_m() const { return speed_of_sound_mps / sample_rate_hz; }

  /// Wider 16-23 kHz band variant; otherwise identical to the defaults.
  static BeepConfig wideband();
};

/// A real-valued waveform with its sampling rate. Amplitudes stay in [-1, 1]
/// for anything produced by this module.
struct SampleBuffer {
  std::vector<double> samples;
  double sample_rate_hz = 0.0;

  std::size_t size() const { return samples.size(); }
};

/// Linear up-chirp from f_low to f_high over the configured duration with a
/// full-length Hann taper (first and last samples are exactly zero).
/// Peak amplitude is 0.9 before the taper. Deterministic.
SampleBuffer generate_chirp(const BeepConfig& config);

/// Linear-phase FIR bandpass with group-delay compensation, so echo delays
/// survive filtering unshifted. Stopband reaches at least 40 dB attenuation
/// 2 kHz outside the band (or at Nyquist, whichever is closer).
SampleBuffer bandpass(const SampleBuffer& buffer, double f_low_hz, double f_high_hz);

/// n_pings copies of (chirp + interval silence), concatenated.
SampleBuffer build_ping_schedule(const BeepConfig& config, std::size_t n_pings);

}  // namespace echoguard
