// include/tse/fft.h

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

#include <complex>
#include <vector>

namespace tse {

// Thin thread-safe wrapper over FFTW (double precision, FFTW_ESTIMATE plans,
// cached per size). Plans are deterministic, so repeated runs produce
// bit-identical results.

// Forward real FFT: n real samples -> n/2+1 complex bins.
std::vector<std::complex<double>> RfftForward(const std::vector<double>& x,
                                              int n);

// Inverse real FFT: n/2+1 complex bins -> n real samples (normalized by 1/n,
// i.e. RfftInverse(RfftForward(x)) == x). The imaginary parts of the DC and
// Nyquist bins are ignored, matching the usual irfft convention.
std::vector<double> RfftInverse(const std::vector<std::complex<double>>& spec,
                                int n);

// Full linear convolution of two real sequences, length na + nb - 1.
std::vector<double> ConvolveFull(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace tse
