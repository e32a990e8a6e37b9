// src/fft.cc

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

#include "tse/fft.h"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

#include "tse/common.h"

namespace tse {

namespace {

// fftw plan creation is not thread-safe; execution via the new-array
// interface is. One cached plan per transform size.
std::mutex g_plan_mutex;

struct PlanCache {
  std::map<int, fftw_plan> forward;   // r2c
  std::map<int, fftw_plan> backward;  // c2r
  ~PlanCache() {
    for (auto& [n, p] : forward) fftw_destroy_plan(p);
    for (auto& [n, p] : backward) fftw_destroy_plan(p);
  }
};

PlanCache& Cache() {
  static PlanCache cache;
  return cache;
}

fftw_plan GetForwardPlan(int n, double* in, fftw_complex* out) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = Cache().forward.find(n);
  if (it != Cache().forward.end()) return it->second;
  fftw_plan p = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
  Cache().forward[n] = p;
  return p;
}

fftw_plan GetBackwardPlan(int n, fftw_complex* in, double* out) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = Cache().backward.find(n);
  if (it != Cache().backward.end()) return it->second;
  fftw_plan p = fftw_plan_dft_c2r_1d(n, in, out, FFTW_ESTIMATE);
  Cache().backward[n] = p;
  return p;
}

struct FftwBuffer {
  explicit FftwBuffer(size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

int NextPow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

std::vector<std::complex<double>> RfftForward(const std::vector<double>& x,
                                              int n) {
  Require(n >= 2, "RfftForward: transform size must be >= 2");
  Require(static_cast<int>(x.size()) <= n,
          "RfftForward: input longer than transform size");
  int nf = n / 2 + 1;
  FftwBuffer inb(sizeof(double) * n);
  FftwBuffer outb(sizeof(fftw_complex) * nf);
  double* in = static_cast<double*>(inb.ptr);
  fftw_complex* out = static_cast<fftw_complex*>(outb.ptr);
  std::memset(in, 0, sizeof(double) * n);
  std::memcpy(in, x.data(), sizeof(double) * x.size());
  fftw_plan plan = GetForwardPlan(n, in, out);
  fftw_execute_dft_r2c(plan, in, out);
  std::vector<std::complex<double>> spec(nf);
  for (int k = 0; k < nf; ++k) spec[k] = {out[k][0], out[k][1]};
  return spec;
}

std::vector<double> RfftInverse(const std::vector<std::complex<double>>& spec,
                                int n) {
  int nf = n / 2 + 1;
  Require(static_cast<int>(spec.size()) == nf,
          "RfftInverse: spectrum size does not match transform size");
  FftwBuffer inb(sizeof(fftw_complex) * nf);
  FftwBuffer outb(sizeof(double) * n);
  fftw_complex* in = static_cast<fftw_complex*>(inb.ptr);
  double* out = static_cast<double*>(outb.ptr);
  for (int k = 0; k < nf; ++k) {
    in[k][0] = spec[k].real();
    in[k][1] = spec[k].imag();
  }
  // c2r ignores the imaginary part of bin 0; zero the Nyquist imaginary part
  // explicitly for even n.
  in[0][1] = 0.0;
  if (n % 2 == 0) in[nf - 1][1] = 0.0;
  fftw_plan plan = GetBackwardPlan(n, in, out);
  fftw_execute_dft_c2r(plan, in, out);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = out[i] / n;
  return x;
}

std::vector<double> ConvolveFull(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  Require(!a.empty() && !b.empty(), "ConvolveFull: empty input");
  int nout = static_cast<int>(a.size() + b.size()) - 1;
  // Direct sum is cheaper for short kernels.
  if (a.size() < 64 || b.size() < 64) {
    std::vector<double> out(nout, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }
  int n = NextPow2(nout);
  auto fa = RfftForward(a, n);
  auto fb = RfftForward(b, n);
  for (size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  auto full = RfftInverse(fa, n);
  full.resize(nout);
  return full;
}

}  // namespace tse
