// include/tse/wave.h

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

#include <string>
#include <vector>

namespace tse {

// Mono audio at a fixed sample rate, full scale +-1.0.
struct Waveform {
  std::vector<double> samples;
  int rate = 16000;

  Waveform() = default;
  Waveform(std::vector<double> s, int r) : samples(std::move(s)), rate(r) {}

  size_t Size() const { return samples.size(); }
  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / rate;
  }
};

// Throws if samples contain NaN/Inf or rate <= 0.
void ValidateWaveform(const Waveform& w, const std::string& context);

double Rms(const Waveform& w);
double RmsDbfs(const Waveform& w);
double SumSquares(const std::vector<double>& x);

// Rescales so that 20*log10(rms) == target_dbfs. All-zero input is an error.
Waveform ScaleToRms(const Waveform& w, double target_dbfs);

// Full linear convolution truncated to len(w), so wet and dry signals stay
// aligned and equal length. Sample rates must match.
Waveform ConvolveTruncated(const Waveform& w, const std::vector<double>& taps,
                           int taps_rate);

// WAV (RIFF) I/O, mono only. Read accepts 16-bit PCM and 32-bit float.
Waveform ReadWav(const std::string& path);
void WriteWavFloat32(const std::string& path, const Waveform& w);
void WriteWavPcm16(const std::string& path, const Waveform& w);

}  // namespace tse
