// include/tse/stft.h

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

#pragma once

#include <Eigen/Dense>

#include "tse/wave.h"

namespace tse {

enum class Window { kHann };

struct StftConfig {
  double frame_len = 0.032;  // seconds
  double hop = 0.016;        // seconds
  int fft_size = 512;
  Window window = Window::kHann;
  int rate = 16000;

  int FrameSamples() const { return static_cast<int>(std::lround(frame_len * rate)); }
  int HopSamples() const { return static_cast<int>(std::lround(hop * rate)); }
  int Bins() const { return fft_size / 2 + 1; }

  // hop <= frame_len, fft_size >= frame in samples, hann only.
  void Validate() const;

  bool operator==(const StftConfig& o) const {
    return frame_len == o.frame_len && hop == o.hop && fft_size == o.fft_size &&
           window == o.window && rate == o.rate;
  }
};

// T x F complex grid, stored as separate real/imag matrices.
struct ComplexSpectrogram {
  Eigen::MatrixXd re;  // T x F
  Eigen::MatrixXd im;  // T x F
  StftConfig config;

  int Frames() const { return static_cast<int>(re.rows()); }
  int Bins() const { return static_cast<int>(re.cols()); }
};

// Number of analysis frames for a signal of the given length:
// floor(len / hop) + 1 with centered framing.
int NumFrames(const StftConfig& cfg, size_t len);

// Centered STFT (reflect padding by frame/2), periodic Hann analysis window.
ComplexSpectrogram Stft(const Waveform& w, const StftConfig& cfg);

// Overlap-add inverse with window-squared normalization; crops the center
// padding and returns exactly target_len samples. Perfect reconstruction for
// spectra produced by Stft.
Waveform Istft(const ComplexSpectrogram& spec, size_t target_len);

// Adjoint of the linear map S -> Istft(S, target_len), used to backpropagate
// a time-domain gradient into spectrogram space. `frames` fixes the frame
// count of the result.
ComplexSpectrogram IstftAdjoint(const std::vector<double>& grad_wave,
                                const StftConfig& cfg, int frames);

}  // namespace tse
