// include/tse/common.h

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

#include <cmath>
#include <stdexcept>
#include <string>

namespace tse {

// Configuration / contract violations (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failures at runtime, e.g. NaN loss (CLI exit code 3).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void Require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void RequireConfig(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}

constexpr double kSpeedOfSound = 343.0;  // m/s
constexpr int kDefaultRate = 16000;

inline double Db(double power_ratio) { return 10.0 * std::log10(power_ratio); }
inline double DbToAmp(double db) { return std::pow(10.0, db / 20.0); }
inline double AmpToDb(double amp) { return 20.0 * std::log10(amp); }

}  // namespace tse
