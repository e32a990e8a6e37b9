// src/room.cc

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

#include "tse/room.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "tse/common.h"
#include "tse/rng.h"

namespace tse {

namespace {

constexpr double kImageJitterMeters = 0.08;  // per axis, reflected images only
constexpr int kBandAttemptCap = 10000;
constexpr double kTailFactor = 1.5;  // modeled tail length relative to RT60

struct Box {
  double lo[3];
  double hi[3];
  bool Empty() const {
    return lo[0] >= hi[0] || lo[1] >= hi[1] || lo[2] >= hi[2];
  }
};

// Allowed source positions: wall clearance in x/y/z plus the height interval.
Box SourceBox(const RoomSpec& room, const SourceConstraints& c) {
  Box b;
  b.lo[0] = c.wall_clearance;
  b.hi[0] = room.dims[0] - c.wall_clearance;
  b.lo[1] = c.wall_clearance;
  b.hi[1] = room.dims[1] - c.wall_clearance;
  b.lo[2] = std::max(c.height_lo, c.wall_clearance);
  b.hi[2] = std::min(c.height_hi, room.dims[2] - c.wall_clearance);
  return b;
}

}  // namespace

double Distance(const Position& a, const Position& b) {
  double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void RoomSpec::Validate() const {
  RequireConfig(dims[0] > 0 && dims[1] > 0 && dims[2] > 0,
                "RoomSpec: dimensions must be positive");
  RequireConfig(rt60 > 0, "RoomSpec: rt60 must be positive");
  RequireConfig(rate > 0, "RoomSpec: rate must be positive");
  for (int i = 0; i < 3; ++i)
    RequireConfig(mic_pos[i] > 0 && mic_pos[i] < dims[i],
                  "RoomSpec: mic must be strictly inside the room");
}

void DistanceBand::Validate() const {
  RequireConfig(lo > 0 && lo < hi, "DistanceBand: need 0 < lo < hi");
}

RirRecord SimulateRir(const RoomSpec& room, const Position& src,
                      uint64_t seed) {
  room.Validate();
  for (int i = 0; i < 3; ++i)
    Require(src[i] > 0 && src[i] < room.dims[i],
            "SimulateRir: source must be strictly inside the room");
  double dist = Distance(src, room.mic_pos);
  Require(dist > 1e-6, "SimulateRir: source coincides with the microphone");

  double fs = room.rate;
  const double* L = room.dims.data();

  // Uniform reflectance from the Sabine relation.
  double volume = L[0] * L[1] * L[2];
  double surface = 2.0 * (L[0] * L[1] + L[1] * L[2] + L[0] * L[2]);
  double alpha = 24.0 * volume * std::log(10.0) /
                 (kSpeedOfSound * surface * room.rt60);
  RequireConfig(alpha <= 1.0,
                "SimulateRir: rt60 too short for this room (Sabine alpha > 1)");
  double beta = std::sqrt(1.0 - alpha);

  double tail_m = kSpeedOfSound * kTailFactor * room.rt60;
  int n_taps = static_cast<int>(std::ceil(kTailFactor * room.rt60 * fs));
  n_taps = std::max(n_taps,
                    static_cast<int>(std::lround(dist / kSpeedOfSound * fs)) + 8);

  int nx = static_cast<int>(std::ceil(tail_m / (2.0 * L[0])));
  int ny = static_cast<int>(std::ceil(tail_m / (2.0 * L[1])));
  int nz = static_cast<int>(std::ceil(tail_m / (2.0 * L[2])));

  std::vector<double> taps(n_taps, 0.0);
  Rng rng(DeriveSeed(seed, 0x726f6f6d));

  for (int ix = -nx; ix <= nx; ++ix) {
    for (int iy = -ny; iy <= ny; ++iy) {
      for (int iz = -nz; iz <= nz; ++iz) {
        for (int q = 0; q <= 1; ++q) {
          for (int j = 0; j <= 1; ++j) {
            for (int k = 0; k <= 1; ++k) {
              int refl = std::abs(ix - q) + std::abs(ix) + std::abs(iy - j) +
                         std::abs(iy) + std::abs(iz - k) + std::abs(iz);
              Position img = {(1 - 2 * q) * src[0] + 2.0 * ix * L[0],
                              (1 - 2 * j) * src[1] + 2.0 * iy * L[1],
                              (1 - 2 * k) * src[2] + 2.0 * iz * L[2]};
              if (refl > 0) {
                img[0] += rng.Uniform(-kImageJitterMeters, kImageJitterMeters);
                img[1] += rng.Uniform(-kImageJitterMeters, kImageJitterMeters);
                img[2] += rng.Uniform(-kImageJitterMeters, kImageJitterMeters);
              }
              double d = std::max(Distance(img, room.mic_pos), 1e-3);
              int idx = static_cast<int>(std::lround(d / kSpeedOfSound * fs));
              if (idx >= n_taps) continue;
              double gain =
                  std::pow(beta, refl) / (4.0 * M_PI * d);
              taps[idx] += gain;
            }
          }
        }
      }
    }
  }

  RirRecord rir;
  rir.taps = std::move(taps);
  rir.rate = room.rate;
  rir.distance = dist;
  rir.room = room;
  rir.src_pos = src;
  return rir;
}

std::pair<RoomSpec, Position> SampleSim1(uint64_t seed) {
  RoomSpec room;
  room.dims = {7.0, 8.0, 3.0};
  room.rt60 = 0.2;
  room.mic_pos = {3.5, 4.0, 1.1};
  room.rate = kDefaultRate;

  SourceConstraints c;
  Box box = SourceBox(room, c);
  Rng rng(seed);
  // Distance window [0.2, 5.0] around a mic well inside the box: rejection
  // terminates quickly.
  while (true) {
    Position src = {rng.Uniform(box.lo[0], box.hi[0]),
                    rng.Uniform(box.lo[1], box.hi[1]),
                    rng.Uniform(box.lo[2], box.hi[2])};
    double d = Distance(src, room.mic_pos);
    if (d >= 0.2 && d <= 5.0) return {room, src};
  }
}

RoomSpec SampleSim2Room(uint64_t seed) {
  Rng rng(seed);
  RoomSpec room;
  room.dims = {rng.Uniform(4.0, 8.0), rng.Uniform(5.0, 10.0),
               rng.Uniform(2.5, 3.0)};
  room.rt60 = rng.Uniform(0.2, 0.5);
  room.rate = kDefaultRate;
  // Mic keeps the same 0.5 m wall clearance as sources; height 1.0-1.5 m.
  room.mic_pos = {rng.Uniform(0.5, room.dims[0] - 0.5),
                  rng.Uniform(0.5, room.dims[1] - 0.5),
                  rng.Uniform(1.0, 1.5)};
  return room;
}

std::optional<Position> SampleSourceInBand(const RoomSpec& room,
                                           const DistanceBand& band,
                                           uint64_t seed) {
  room.Validate();
  band.Validate();
  SourceConstraints c;
  Box box = SourceBox(room, c);
  if (box.Empty()) return std::nullopt;
  Rng rng(seed);
  for (int attempt = 0; attempt < kBandAttemptCap; ++attempt) {
    Position src = {rng.Uniform(box.lo[0], box.hi[0]),
                    rng.Uniform(box.lo[1], box.hi[1]),
                    rng.Uniform(box.lo[2], box.hi[2])};
    double d = Distance(src, room.mic_pos);
    if (d >= band.lo && d <= band.hi) return src;
  }
  return std::nullopt;
}

std::array<double, 6> MicWallDistances(const RoomSpec& room) {
  std::array<double, 6> d = {room.mic_pos[0], room.dims[0] - room.mic_pos[0],
                             room.mic_pos[1], room.dims[1] - room.mic_pos[1],
                             room.mic_pos[2], room.dims[2] - room.mic_pos[2]};
  for (double v : d)
    Require(v > 0, "MicWallDistances: mic on or outside a wall");
  return d;
}

double MaxFeasibleDistance(const RoomSpec& room, const SourceConstraints& c) {
  Box box = SourceBox(room, c);
  Require(!box.Empty(), "MaxFeasibleDistance: no feasible source region");
  double best = 0.0;
  for (int i = 0; i < 8; ++i) {
    Position corner = {i & 1 ? box.hi[0] : box.lo[0],
                       i & 2 ? box.hi[1] : box.lo[1],
                       i & 4 ? box.hi[2] : box.lo[2]};
    best = std::max(best, Distance(corner, room.mic_pos));
  }
  return best;
}

double EstimateRt60(const RirRecord& rir) {
  const auto& h = rir.taps;
  Require(!h.empty(), "EstimateRt60: empty impulse response");
  int n = static_cast<int>(h.size());

  // Schroeder backward integration.
  std::vector<double> edc(n);
  double acc = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    acc += h[i] * h[i];
    edc[i] = acc;
  }
  Require(edc[0] > 0, "EstimateRt60: all-zero impulse response");

  int t5 = -1, t25 = -1;
  for (int i = 0; i < n; ++i) {
    double db = Db(edc[i] / edc[0]);
    if (t5 < 0 && db <= -5.0) t5 = i;
    if (db <= -25.0) {
      t25 = i;
      break;
    }
  }
  Require(t5 >= 0 && t25 > t5 + 8, "EstimateRt60: insufficient decay range");
  // A -25 dB point only at the very tail means there is no real decay
  // (e.g. stationary noise).
  Require(t25 < 0.95 * n, "EstimateRt60: decay reached only at signal tail");

  // Least-squares line through the dB curve on [t5, t25].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = t25 - t5 + 1;
  for (int i = t5; i <= t25; ++i) {
    double x = static_cast<double>(i) / rir.rate;
    double y = Db(edc[i] / edc[0]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  Require(denom > 0, "EstimateRt60: degenerate fit range");
  double slope = (m * sxy - sx * sy) / denom;  // dB per second
  Require(slope < 0, "EstimateRt60: energy does not decay");
  return -60.0 / slope;
}

double Drr(const RirRecord& rir, double direct_window) {
  const auto& h = rir.taps;
  Require(!h.empty(), "Drr: empty impulse response");
  int n = static_cast<int>(h.size());
  int peak = 0;
  double peak_abs = 0.0, total = 0.0;
  for (int i = 0; i < n; ++i) {
    total += h[i] * h[i];
    if (std::abs(h[i]) > peak_abs) {
      peak_abs = std::abs(h[i]);
      peak = i;
    }
  }
  Require(total > 0, "Drr: all-zero impulse response");

  int win = static_cast<int>(std::lround(direct_window * rir.rate));
  int lo = std::max(0, peak - win), hi = std::min(n - 1, peak + win);
  double direct = 0.0;
  for (int i = lo; i <= hi; ++i) direct += h[i] * h[i];
  double reverb = total - direct;
  if (reverb <= total * 1e-10) return 100.0;
  return std::clamp(Db(direct / reverb), -100.0, 100.0);
}

namespace {

using nlohmann::ordered_json;

ordered_json RoomToJson(const RoomSpec& room) {
  return ordered_json{{"dims", room.dims},
                      {"rt60", room.rt60},
                      {"mic_pos", room.mic_pos},
                      {"rate", room.rate}};
}

RoomSpec RoomFromJson(const ordered_json& j) {
  RoomSpec room;
  room.dims = j.at("dims").get<Position>();
  room.rt60 = j.at("rt60").get<double>();
  room.mic_pos = j.at("mic_pos").get<Position>();
  room.rate = j.at("rate").get<int>();
  return room;
}

}  // namespace

void WriteRirManifest(const std::string& path,
                      const std::vector<RirDatasetEntry>& entries) {
  std::ofstream os(path);
  Require(os.good(), "WriteRirManifest: cannot open " + path);
  for (const auto& e : entries) {
    ordered_json j{{"rir_path", e.rir_path},
                   {"room", RoomToJson(e.room)},
                   {"src_pos", e.src_pos},
                   {"distance", e.distance},
                   {"room_id", e.room_id},
                   {"seed", e.seed}};
    os << j.dump() << "\n";
  }
  Require(os.good(), "WriteRirManifest: write failed for " + path);
}

std::vector<RirDatasetEntry> ReadRirManifest(const std::string& path) {
  std::ifstream is(path);
  Require(is.good(), "ReadRirManifest: cannot open " + path);
  std::vector<RirDatasetEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
      RirDatasetEntry e;
      e.rir_path = j.at("rir_path").get<std::string>();
      e.room = RoomFromJson(j.at("room"));
      e.src_pos = j.at("src_pos").get<Position>();
      e.distance = j.at("distance").get<double>();
      e.room_id = j.at("room_id").get<int>();
      e.seed = j.at("seed").get<uint64_t>();
      entries.push_back(std::move(e));
    } catch (const ordered_json::exception& ex) {
      throw std::invalid_argument("ReadRirManifest: malformed line " +
                                  std::to_string(line_no) + " in " + path +
                                  ": " + ex.what());
    }
  }
  return entries;
}

}  // namespace tse
