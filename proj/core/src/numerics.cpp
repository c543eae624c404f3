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

#include "qbluestein/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "qbluestein/errors.hpp"

namespace qbluestein {

void check_complex_vec(std::span<const Complex> x, const char* what) {
  if (x.empty()) {
    throw SizeError(std::string(what) + ": empty vector");
  }
  for (const Complex& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ArgumentError(std::string(what) + ": non-finite entry");
    }
  }
}

unsigned ceil_log2_at_least_one(std::uint64_t v) {
  unsigned m = 1;
  while ((std::uint64_t{1} << m) < v) {
    ++m;
  }
  return m;
}

Complex chirp(std::uint64_t t, std::uint64_t n, int sign) {
  const std::uint64_t two_n = 2 * n;
  const std::uint64_t r = t % two_n;
  // r*r < 4n^2 fits comfortably for any n this library can allocate.
  const std::uint64_t sq = (r * r) % two_n;
  return std::polar(1.0, sign * kPi * static_cast<double>(sq) / static_cast<double>(n));
}

Complex unit_root(std::uint64_t k, std::uint64_t n) {
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(k % n) / static_cast<double>(n));
}

ComplexVec dft_direct(std::span<const Complex> x) {
  check_complex_vec(x, "dft_direct");
  const std::uint64_t n = x.size();
  ComplexVec roots(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    roots[k] = unit_root(k, n);
  }
  ComplexVec y(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    Complex acc{};
    std::uint64_t idx = 0;  // (j*k) mod n, advanced incrementally
    for (std::uint64_t j = 0; j < n; ++j) {
      acc += x[j] * roots[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    y[k] = acc;
  }
  return y;
}

ComplexVec fft_radix2(std::span<const Complex> x, Direction direction) {
  check_complex_vec(x, "fft_radix2");
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) {
    throw SizeError("fft_radix2: length " + std::to_string(n) + " is not a power of two");
  }
  ComplexVec a(x.begin(), x.end());
  if (n == 1) {
    return a;
  }
  const unsigned bits = static_cast<unsigned>(std::countr_zero(n));

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (unsigned b = 0; b < bits; ++b) {
      r |= ((i >> b) & 1U) << (bits - 1 - b);
    }
    if (i < r) std::swap(a[i], a[r]);
  }

  // Twiddles for the largest stage; smaller stages stride through the table.
  ComplexVec twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = unit_root(k, n);
    if (direction == Direction::kInverse) twiddle[k] = std::conj(twiddle[k]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = a[start + k];
        const Complex v = a[start + k + half] * twiddle[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }

  if (direction == Direction::kInverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& v : a) v *= scale;
  }
  return a;
}

namespace {

void check_same_length(std::span<const Complex> a, std::span<const Complex> b, const char* what) {
  check_complex_vec(a, what);
  check_complex_vec(b, what);
  if (a.size() != b.size()) {
    throw SizeError(std::string(what) + ": length mismatch " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
}

}  // namespace

ComplexVec convolve_circular_direct(std::span<const Complex> a, std::span<const Complex> b) {
  check_same_length(a, b, "convolve_circular_direct");
  const std::size_t n = a.size();
  ComplexVec c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
      acc += a[j] * b[(k + n - j) % n];
    }
    c[k] = acc;
  }
  return c;
}

ComplexVec convolve_circular(std::span<const Complex> a, std::span<const Complex> b) {
  check_same_length(a, b, "convolve_circular");
  if (!is_power_of_two(a.size())) {
    return convolve_circular_direct(a, b);
  }
  ComplexVec fa = fft_radix2(a, Direction::kForward);
  const ComplexVec fb = fft_radix2(b, Direction::kForward);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  return fft_radix2(fa, Direction::kInverse);
}

ComplexVec wrapped_chirp_kernel(std::size_t n, std::size_t big_m) {
  if (n == 0) throw ArgumentError("wrapped_chirp_kernel: n must be >= 1");
  if (big_m < 2 * n - 1) {
    throw SizeError("wrapped_chirp_kernel: workspace " + std::to_string(big_m) +
                    " smaller than 2n-1 = " + std::to_string(2 * n - 1));
  }
  ComplexVec b(big_m, Complex{0.0, 0.0});
  for (std::size_t t = 0; t < n; ++t) {
    const Complex w = chirp(t, n, +1);
    b[t] = w;
    if (t > 0) b[big_m - t] = w;
  }
  return b;
}

ComplexVec bluestein_classical(std::span<const Complex> x) {
  check_complex_vec(x, "bluestein_classical");
  const std::size_t n = x.size();
  const std::size_t big_m = std::size_t{1} << ceil_log2_at_least_one(2 * n - 1);

  ComplexVec a(big_m, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp(j, n, -1);

  const ComplexVec conv = convolve_circular(a, wrapped_chirp_kernel(n, big_m));

  ComplexVec y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = conv[k] * chirp(k, n, -1);
  return y;
}

double l2_norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const Complex& v : x) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_error(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw SizeError("max_abs_error: length mismatch");
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

double relative_l2_error(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw SizeError("relative_l2_error: length mismatch");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += std::norm(a[i] - b[i]);
  const double ref = l2_norm(b);
  diff = std::sqrt(diff);
  return ref > 0.0 ? diff / ref : diff;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw SizeError("fit_line: length mismatch");
  if (x.size() < 2) throw SizeError("fit_line: need at least two points");
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ArgumentError("fit_line: x values are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace qbluestein
