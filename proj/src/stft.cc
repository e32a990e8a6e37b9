// src/stft.cc

// Copyright 2026  DistTSE Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "tse/stft.h"

#include <cmath>

#include "tse/common.h"
#include "tse/fft.h"

namespace tse {

namespace {

constexpr double kColaEps = 1e-10;

// Periodic Hann, the standard analysis window for STFT processing.
std::vector<double> HannPeriodic(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * i / n));
  return w;
}

// Reflect-pad by `pad` on both sides.
std::vector<double> ReflectPad(const std::vector<double>& x, int pad) {
  int n = static_cast<int>(x.size());
  Require(n > pad, "Stft: signal shorter than padding window");
  std::vector<double> out(n + 2 * pad);
  for (int i = 0; i < pad; ++i) out[i] = x[pad - i];
  for (int i = 0; i < n; ++i) out[pad + i] = x[i];
  for (int i = 0; i < pad; ++i) out[pad + n + i] = x[n - 2 - i];
  return out;
}

}  // namespace

void StftConfig::Validate() const {
  RequireConfig(rate > 0, "StftConfig: rate must be positive");
  RequireConfig(frame_len > 0 && hop > 0, "StftConfig: frame/hop must be positive");
  RequireConfig(hop <= frame_len, "StftConfig: hop must not exceed frame length");
  RequireConfig(fft_size >= FrameSamples(),
                "StftConfig: fft_size must cover the frame");
  RequireConfig(fft_size % 2 == 0, "StftConfig: fft_size must be even");
  RequireConfig(FrameSamples() % 2 == 0, "StftConfig: frame must be even");
  RequireConfig(window == Window::kHann, "StftConfig: unsupported window");
}

int NumFrames(const StftConfig& cfg, size_t len) {
  return static_cast<int>(len / cfg.HopSamples()) + 1;
}

ComplexSpectrogram Stft(const Waveform& w, const StftConfig& cfg) {
  cfg.Validate();
  Require(!w.samples.empty(), "Stft: empty input");
  Require(w.rate == cfg.rate, "Stft: waveform rate does not match config");
  ValidateWaveform(w, "Stft");
  int frame = cfg.FrameSamples();
  int hop = cfg.HopSamples();
  Require(static_cast<int>(w.samples.size()) >= frame,
          "Stft: input shorter than one frame");

  int pad = frame / 2;
  auto padded = ReflectPad(w.samples, pad);
  int frames = NumFrames(cfg, w.samples.size());
  int bins = cfg.Bins();
  auto win = HannPeriodic(frame);

  ComplexSpectrogram spec;
  spec.config = cfg;
  spec.re.resize(frames, bins);
  spec.im.resize(frames, bins);

  std::vector<double> buf(frame);
  for (int t = 0; t < frames; ++t) {
    int start = t * hop;
    for (int m = 0; m < frame; ++m) buf[m] = padded[start + m] * win[m];
    auto bins_t = RfftForward(buf, cfg.fft_size);
    for (int k = 0; k < bins; ++k) {
      spec.re(t, k) = bins_t[k].real();
      spec.im(t, k) = bins_t[k].imag();
    }
  }
  return spec;
}

Waveform Istft(const ComplexSpectrogram& spec, size_t target_len) {
  const StftConfig& cfg = spec.config;
  cfg.Validate();
  int frame = cfg.FrameSamples();
  int hop = cfg.HopSamples();
  int pad = frame / 2;
  int frames = spec.Frames();
  Require(frames >= 1, "Istft: empty spectrogram");
  Require(spec.Bins() == cfg.Bins(), "Istft: bin count does not match config");

  int padded_len = (frames - 1) * hop + frame;
  Require(static_cast<int>(target_len) + pad <= padded_len,
          "Istft: target length exceeds synthesized coverage");

  auto win = HannPeriodic(frame);
  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> norm(padded_len, 0.0);
  std::vector<std::complex<double>> bins_t(cfg.Bins());

  for (int t = 0; t < frames; ++t) {
    for (int k = 0; k < cfg.Bins(); ++k)
      bins_t[k] = {spec.re(t, k), spec.im(t, k)};
    auto y = RfftInverse(bins_t, cfg.fft_size);
    int start = t * hop;
    for (int m = 0; m < frame; ++m) {
      acc[start + m] += win[m] * y[m];
      norm[start + m] += win[m] * win[m];
    }
  }

  Waveform out;
  out.rate = cfg.rate;
  out.samples.resize(target_len);
  for (size_t n = 0; n < target_len; ++n) {
    double nv = norm[pad + n];
    Require(nv > kColaEps, "Istft: window/hop violates overlap-add coverage");
    out.samples[n] = acc[pad + n] / nv;
  }
  return out;
}

ComplexSpectrogram IstftAdjoint(const std::vector<double>& grad_wave,
                                const StftConfig& cfg, int frames) {
  cfg.Validate();
  int frame = cfg.FrameSamples();
  int hop = cfg.HopSamples();
  int pad = frame / 2;
  int fft = cfg.fft_size;
  int bins = cfg.Bins();
  int padded_len = (frames - 1) * hop + frame;
  Require(static_cast<int>(grad_wave.size()) + pad <= padded_len,
          "IstftAdjoint: gradient longer than synthesized coverage");

  auto win = HannPeriodic(frame);
  std::vector<double> norm(padded_len, 0.0);
  for (int t = 0; t < frames; ++t)
    for (int m = 0; m < frame; ++m)
      norm[t * hop + m] += win[m] * win[m];

  // Spread the time gradient back onto the padded grid, undoing the
  // per-sample OLA normalization.
  std::vector<double> ga(padded_len, 0.0);
  for (size_t n = 0; n < grad_wave.size(); ++n) {
    double nv = norm[pad + n];
    Require(nv > kColaEps, "IstftAdjoint: overlap-add coverage violated");
    ga[pad + n] = grad_wave[n] / nv;
  }

  ComplexSpectrogram out;
  out.config = cfg;
  out.re.resize(frames, bins);
  out.im.resize(frames, bins);

  std::vector<double> gy(frame);
  for (int t = 0; t < frames; ++t) {
    int start = t * hop;
    for (int m = 0; m < frame; ++m) gy[m] = win[m] * ga[start + m];
    auto gx = RfftForward(gy, fft);
    for (int k = 0; k < bins; ++k) {
      // Interior bins appear twice in the hermitian spectrum, DC/Nyquist once.
      double scale = (k == 0 || k == bins - 1) ? 1.0 / fft : 2.0 / fft;
      out.re(t, k) = scale * gx[k].real();
      out.im(t, k) = scale * gx[k].imag();
    }
    // irfft ignores the imaginary parts of DC and Nyquist.
    out.im(t, 0) = 0.0;
    out.im(t, bins - 1) = 0.0;
  }
  return out;
}

}  // namespace tse
