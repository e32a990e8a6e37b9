// src/wave.cc

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

#include "tse/wave.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "tse/common.h"
#include "tse/fft.h"

namespace tse {

void ValidateWaveform(const Waveform& w, const std::string& context) {
  Require(w.rate > 0, context + ": sample rate must be positive");
  for (double s : w.samples)
    Require(std::isfinite(s), context + ": non-finite sample");
}

double SumSquares(const std::vector<double>& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

double Rms(const Waveform& w) {
  Require(!w.samples.empty(), "Rms: empty waveform");
  return std::sqrt(SumSquares(w.samples) / w.samples.size());
}

double RmsDbfs(const Waveform& w) { return AmpToDb(Rms(w)); }

Waveform ScaleToRms(const Waveform& w, double target_dbfs) {
  ValidateWaveform(w, "ScaleToRms");
  double rms = Rms(w);
  Require(rms > 0.0, "ScaleToRms: all-zero input has undefined gain");
  double gain = DbToAmp(target_dbfs) / rms;
  Waveform out = w;
  for (double& s : out.samples) s *= gain;
  return out;
}

Waveform ConvolveTruncated(const Waveform& w, const std::vector<double>& taps,
                           int taps_rate) {
  ValidateWaveform(w, "ConvolveTruncated");
  Require(w.rate == taps_rate, "ConvolveTruncated: sample rate mismatch");
  Require(!taps.empty(), "ConvolveTruncated: empty impulse response");
  auto full = ConvolveFull(w.samples, taps);
  full.resize(w.samples.size());
  return Waveform(std::move(full), w.rate);
}

namespace {

struct RiffHeader {
  uint16_t format = 0;  // 1 = PCM, 3 = IEEE float
  uint16_t channels = 0;
  uint32_t rate = 0;
  uint16_t bits = 0;
};

void WriteU32(std::ofstream& os, uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), 4);
}
void WriteU16(std::ofstream& os, uint16_t v) {
  os.write(reinterpret_cast<const char*>(&v), 2);
}

void WriteWavHeader(std::ofstream& os, const Waveform& w, uint16_t format,
                    uint16_t bits) {
  uint32_t bytes_per_sample = bits / 8;
  uint32_t data_bytes = static_cast<uint32_t>(w.samples.size()) * bytes_per_sample;
  os.write("RIFF", 4);
  WriteU32(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  WriteU32(os, 16);
  WriteU16(os, format);
  WriteU16(os, 1);  // mono
  WriteU32(os, static_cast<uint32_t>(w.rate));
  WriteU32(os, static_cast<uint32_t>(w.rate) * bytes_per_sample);
  WriteU16(os, static_cast<uint16_t>(bytes_per_sample));
  WriteU16(os, bits);
  os.write("data", 4);
  WriteU32(os, data_bytes);
}

}  // namespace

Waveform ReadWav(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  Require(is.good(), "ReadWav: cannot open " + path);

  char tag[4];
  uint32_t riff_size = 0;
  is.read(tag, 4);
  Require(is.good() && std::memcmp(tag, "RIFF", 4) == 0,
          "ReadWav: not a RIFF file: " + path);
  is.read(reinterpret_cast<char*>(&riff_size), 4);
  is.read(tag, 4);
  Require(is.good() && std::memcmp(tag, "WAVE", 4) == 0,
          "ReadWav: not a WAVE file: " + path);

  RiffHeader hdr;
  std::vector<char> data;
  bool have_fmt = false, have_data = false;
  while (is.read(tag, 4)) {
    uint32_t chunk_size = 0;
    is.read(reinterpret_cast<char*>(&chunk_size), 4);
    if (!is.good()) break;
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      std::vector<char> fmt(chunk_size);
      is.read(fmt.data(), chunk_size);
      Require(chunk_size >= 16, "ReadWav: malformed fmt chunk in " + path);
      std::memcpy(&hdr.format, fmt.data() + 0, 2);
      std::memcpy(&hdr.channels, fmt.data() + 2, 2);
      std::memcpy(&hdr.rate, fmt.data() + 4, 4);
      std::memcpy(&hdr.bits, fmt.data() + 14, 2);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      is.read(data.data(), chunk_size);
      have_data = true;
    } else {
      is.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
    if (chunk_size & 1 && std::memcmp(tag, "data", 4) == 0)
      is.seekg(1, std::ios::cur);
  }
  Require(have_fmt && have_data, "ReadWav: missing fmt/data chunk in " + path);
  Require(hdr.channels == 1, "ReadWav: only mono supported: " + path);

  Waveform w;
  w.rate = static_cast<int>(hdr.rate);
  if (hdr.format == 1 && hdr.bits == 16) {
    size_t n = data.size() / 2;
    w.samples.resize(n);
    const int16_t* p = reinterpret_cast<const int16_t*>(data.data());
    for (size_t i = 0; i < n; ++i) w.samples[i] = p[i] / 32768.0;
  } else if (hdr.format == 3 && hdr.bits == 32) {
    size_t n = data.size() / 4;
    w.samples.resize(n);
    const float* p = reinterpret_cast<const float*>(data.data());
    for (size_t i = 0; i < n; ++i) w.samples[i] = p[i];
  } else {
    Require(false, "ReadWav: unsupported format (want PCM16 or float32): " + path);
  }
  return w;
}

void WriteWavFloat32(const std::string& path, const Waveform& w) {
  ValidateWaveform(w, "WriteWavFloat32");
  std::ofstream os(path, std::ios::binary);
  Require(os.good(), "WriteWavFloat32: cannot open " + path);
  WriteWavHeader(os, w, 3, 32);
  std::vector<float> buf(w.samples.begin(), w.samples.end());
  os.write(reinterpret_cast<const char*>(buf.data()), buf.size() * 4);
  Require(os.good(), "WriteWavFloat32: write failed for " + path);
}

void WriteWavPcm16(const std::string& path, const Waveform& w) {
  ValidateWaveform(w, "WriteWavPcm16");
  std::ofstream os(path, std::ios::binary);
  Require(os.good(), "WriteWavPcm16: cannot open " + path);
  WriteWavHeader(os, w, 1, 16);
  std::vector<int16_t> buf(w.samples.size());
  for (size_t i = 0; i < w.samples.size(); ++i) {
    double v = std::clamp(w.samples[i], -1.0, 1.0);
    buf[i] = static_cast<int16_t>(std::lrint(v * 32767.0));
  }
  os.write(reinterpret_cast<const char*>(buf.data()), buf.size() * 2);
  Require(os.good(), "WriteWavPcm16: write failed for " + path);
}

}  // namespace tse
