// include/tse/sweep.h

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

#include "tse/room.h"
#include "tse/wave.h"

namespace tse {

// Exponential sine sweep plus its amplitude-compensated, time-reversed
// inverse filter. Convolving the pair yields an impulse-like pulse centered
// at len(sweep) - 1, normalized to unit peak.
struct EssPair {
  Waveform sweep;
  Waveform inverse_filter;
};

EssPair GenerateEss(double f1_hz, double f2_hz, double duration_s, int rate);

// Convolves a sweep recording with the inverse filter and keeps the causal
// part starting at the pulse center; harmonic-distortion images arriving
// earlier are discarded. Room geometry of the result is unknown and left
// defaulted. max_taps < 0 keeps everything after the pulse center.
RirRecord DeconvolveSweep(const Waveform& recording,
                          const Waveform& inverse_filter, int max_taps = -1);

}  // namespace tse
