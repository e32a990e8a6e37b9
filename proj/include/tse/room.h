// include/tse/room.h

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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tse/wave.h"

namespace tse {

using Position = std::array<double, 3>;

double Distance(const Position& a, const Position& b);

// Shoebox room with a single microphone.
struct RoomSpec {
  Position dims = {0, 0, 0};  // Lx, Ly, Lz in meters
  double rt60 = 0.0;          // seconds
  Position mic_pos = {0, 0, 0};
  int rate = 16000;

  void Validate() const;  // mic strictly inside, rt60 > 0
};

// Impulse response taps plus the geometry they were generated from.
struct RirRecord {
  std::vector<double> taps;
  int rate = 16000;
  double distance = 0.0;  // source-mic distance in meters
  RoomSpec room;
  Position src_pos = {0, 0, 0};
};

struct DistanceBand {
  double lo = 0.0;  // meters
  double hi = 0.0;

  void Validate() const;  // 0 < lo < hi
};

// Placement constraints shared by the Sim1/Sim2 protocols: sources keep
// 0.5 m clearance from every wall and sit at speaking height.
struct SourceConstraints {
  double wall_clearance = 0.5;
  double height_lo = 1.2;
  double height_hi = 2.0;
};

// Image-source RIR for a shoebox room. Uniform wall reflectance derived from
// RT60 via the Sabine relation; reflected image positions get a small seeded
// jitter (<= 8 cm per axis) to break sweeping-echo artifacts. The direct path
// is never jittered, so its arrival lands at round(distance / c * rate).
RirRecord SimulateRir(const RoomSpec& room, const Position& src, uint64_t seed);

// Sim1 protocol: fixed 7 x 8 x 3 room, RT60 0.2 s, mic at (3.5, 4, 1.1);
// source drawn with 0.5 m wall clearance, height in [1.2, 2.0] m and
// mic distance in [0.2, 5.0] m.
std::pair<RoomSpec, Position> SampleSim1(uint64_t seed);

// Sim2 protocol: room dims uniform in [4,8] x [5,10] x [2.5,3.0], RT60
// uniform in [0.2, 0.5] s; one mic per room with 0.5 m wall clearance and
// height in [1.0, 1.5] m.
RoomSpec SampleSim2Room(uint64_t seed);

// Rejection-samples a source whose mic distance falls inside the band while
// satisfying the standard placement constraints. Returns nullopt when the
// band is geometrically infeasible (bounded attempts).
std::optional<Position> SampleSourceInBand(const RoomSpec& room,
                                           const DistanceBand& band,
                                           uint64_t seed);

// The six mic-to-wall distances (x, Lx-x, y, Ly-y, z, Lz-z) in fixed order.
std::array<double, 6> MicWallDistances(const RoomSpec& room);

// Largest mic distance reachable by a constrained source in this room.
double MaxFeasibleDistance(const RoomSpec& room,
                           const SourceConstraints& c = {});

// Schroeder backward-integration RT60 estimate: line fit on the -5..-25 dB
// decay range extrapolated to 60 dB. Errors when the response does not decay.
double EstimateRt60(const RirRecord& rir);

// Direct-to-reverberation ratio in dB, direct energy taken within
// +-direct_window seconds of the strongest tap. Capped at +-100 dB.
double Drr(const RirRecord& rir, double direct_window = 0.0025);

// One line per RIR in a JSONL manifest next to the wav files.
struct RirDatasetEntry {
  std::string rir_path;  // relative to the manifest directory
  RoomSpec room;
  Position src_pos = {0, 0, 0};
  double distance = 0.0;
  int room_id = 0;
  uint64_t seed = 0;
};

void WriteRirManifest(const std::string& path,
                      const std::vector<RirDatasetEntry>& entries);
std::vector<RirDatasetEntry> ReadRirManifest(const std::string& path);

}  // namespace tse
