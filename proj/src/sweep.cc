// src/sweep.cc

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

#include "tse/sweep.h"

#include <algorithm>
#include <cmath>

#include "tse/common.h"
#include "tse/fft.h"

namespace tse {

EssPair GenerateEss(double f1_hz, double f2_hz, double duration_s, int rate) {
  Require(rate > 0, "GenerateEss: rate must be positive");
  Require(f1_hz > 0 && f1_hz < f2_hz && f2_hz < rate / 2.0,
          "GenerateEss: need 0 < f1 < f2 < rate/2");
  Require(duration_s > 0, "GenerateEss: duration must be positive");

  int n = static_cast<int>(std::lround(duration_s * rate));
  Require(n >= 64, "GenerateEss: sweep too short");
  double lnr = std::log(f2_hz / f1_hz);
  double k = 2.0 * M_PI * f1_hz * duration_s / lnr;

  Waveform sweep;
  sweep.rate = rate;
  sweep.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / rate;
    sweep.samples[i] = std::sin(k * (std::exp(t / duration_s * lnr) - 1.0));
  }
  // Short raised-cosine fades keep the band edges from ringing.
  int fade = std::max(16, n / 50);
  for (int i = 0; i < fade; ++i) {
    double g = 0.5 * (1.0 - std::cos(M_PI * i / fade));
    sweep.samples[i] *= g;
    sweep.samples[n - 1 - i] *= g;
  }

  // Time-reversed sweep, attenuated by 6 dB/octave so the combined response
  // is spectrally flat.
  Waveform inv;
  inv.rate = rate;
  inv.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    double env = std::exp(-static_cast<double>(i) / (n - 1) * lnr);
    inv.samples[i] = sweep.samples[n - 1 - i] * env;
  }

  // Normalize so sweep (*) inverse has unit peak at the pulse center.
  auto pulse = ConvolveFull(sweep.samples, inv.samples);
  double peak = 0.0;
  for (double v : pulse) peak = std::max(peak, std::abs(v));
  Require(peak > 0, "GenerateEss: degenerate sweep");
  for (double& v : inv.samples) v /= peak;

  return {std::move(sweep), std::move(inv)};
}

RirRecord DeconvolveSweep(const Waveform& recording,
                          const Waveform& inverse_filter, int max_taps) {
  Require(!recording.samples.empty(), "DeconvolveSweep: empty recording");
  Require(!inverse_filter.samples.empty(),
          "DeconvolveSweep: empty inverse filter");
  Require(recording.rate == inverse_filter.rate,
          "DeconvolveSweep: sample rate mismatch");
  ValidateWaveform(recording, "DeconvolveSweep");

  auto full = ConvolveFull(recording.samples, inverse_filter.samples);
  // The linear response starts at the pulse center, len(inverse) - 1.
  size_t start = inverse_filter.samples.size() - 1;
  size_t avail = full.size() - start;
  size_t n = max_taps < 0 ? avail : std::min(avail, static_cast<size_t>(max_taps));

  RirRecord rir;
  rir.rate = recording.rate;
  rir.taps.assign(full.begin() + start, full.begin() + start + n);
  return rir;
}

}  // namespace tse
