// Copyright 2026 The qbluestein Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qbluestein {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class Direction { kForward, kInverse };

/// Throws SizeError when `x` is empty and ArgumentError on NaN/Inf entries.
void check_complex_vec(std::span<const Complex> x, const char* what);

constexpr bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// Smallest m >= 1 with 2^m >= v.
unsigned ceil_log2_at_least_one(std::uint64_t v);

/// e^{i*pi*sign*t^2/n}, with t^2 reduced modulo 2n in integer arithmetic so the
/// phase stays accurate for large t.
Complex chirp(std::uint64_t t, std::uint64_t n, int sign);

/// e^{-2*pi*i*k/n} with k reduced modulo n.
Complex unit_root(std::uint64_t k, std::uint64_t n);

// Reference DFT, y_k = sum_j x_j e^{-2 pi i j k / N}. O(N^2).
ComplexVec dft_direct(std::span<const Complex> x);

// Iterative radix-2 FFT (bit reversal + butterflies). Unnormalized forward;
// the inverse conjugates the kernel and divides by the length.
ComplexVec fft_radix2(std::span<const Complex> x, Direction direction = Direction::kForward);

// c_k = sum_j a_j b_{(k-j) mod M}, evaluated term by term.
ComplexVec convolve_circular_direct(std::span<const Complex> a, std::span<const Complex> b);

// Same contract as convolve_circular_direct; goes through fft_radix2 when the
// length is a power of two and falls back to the direct sum otherwise.
ComplexVec convolve_circular(std::span<const Complex> a, std::span<const Complex> b);

/// Length-M chirp kernel for an N-point transform:
///   b[t] = e^{+i pi t^2/N}      for 0 <= t < N
///   b[M-t] = e^{+i pi t^2/N}    for 1 <= t < N
///   b[t] = 0                    otherwise.
/// Circular indexing b[(k-j) mod M] then reproduces e^{+i pi (k-j)^2/N} for
/// every |k-j| < N. Requires M >= 2N-1.
ComplexVec wrapped_chirp_kernel(std::size_t n, std::size_t big_m);

/// Arbitrary-length DFT through chirp, zero padding to a power of two
/// M >= 2N-1, FFT circular convolution with the wrapped kernel, and de-chirp.
ComplexVec bluestein_classical(std::span<const Complex> x);

double l2_norm(std::span<const Complex> x);
double max_abs_error(std::span<const Complex> a, std::span<const Complex> b);
/// ||a - b|| / ||b||; falls back to the absolute error when ||b|| == 0.
double relative_l2_error(std::span<const Complex> a, std::span<const Complex> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Needs two distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace qbluestein
