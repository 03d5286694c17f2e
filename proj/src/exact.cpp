// Copyright 2026 The symmean Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symmean/exact.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdint>
#include <limits>

namespace symmean {
namespace {

struct Dyadic {
  std::int64_t mantissa;  // signed, |mantissa| < 2^53
  long exponent;
};

Dyadic decompose(double value) {
  if (value == 0.0) return {0, LONG_MAX};
  int e = 0;
  const double fraction = std::frexp(value, &e);
  auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  long exponent = e - 53;
  while (mantissa % 2 == 0) {
    mantissa /= 2;
    ++exponent;
  }
  return {mantissa, exponent};
}

BigInt shifted(std::int64_t mantissa, long shift) {
  BigInt out = mantissa;
  if (shift > 0) out <<= static_cast<unsigned>(shift);
  return out;
}

}  // namespace

DyadicLattice to_lattice(std::span<const double> values) {
  std::vector<Dyadic> parts;
  parts.reserve(values.size());
  long exponent = LONG_MAX;
  for (double v : values) {
    parts.push_back(decompose(v));
    exponent = std::min(exponent, parts.back().exponent);
  }
  if (exponent == LONG_MAX) exponent = 0;  // all zeros
  DyadicLattice lattice;
  lattice.exponent = exponent;
  lattice.mantissas.reserve(parts.size());
  for (const Dyadic& p : parts) {
    lattice.mantissas.push_back(
        p.mantissa == 0 ? BigInt(0) : shifted(p.mantissa, p.exponent - exponent));
  }
  return lattice;
}

Rational exact_rational(double value) {
  const Dyadic d = decompose(value);
  if (d.mantissa == 0) return Rational(0);
  BigInt num = d.mantissa;
  BigInt den = 1;
  if (d.exponent >= 0) {
    num <<= static_cast<unsigned>(d.exponent);
  } else {
    den <<= static_cast<unsigned>(-d.exponent);
  }
  return Rational(num, den);
}

double to_double_scaled(const Rational& q, long exp2) {
  if (q == 0) return 0.0;
  BigInt num = abs(numerator(q));
  BigInt den = denominator(q);
  const long num_bits = static_cast<long>(msb(num));
  const long den_bits = static_cast<long>(msb(den));
  // Bring the integer quotient to ~66 significant bits, keeping a sticky bit
  // so the final conversion rounds from a faithful value.
  const long shift = 65 - (num_bits - den_bits);
  if (shift > 0) {
    num <<= static_cast<unsigned>(shift);
  } else if (shift < 0) {
    den <<= static_cast<unsigned>(-shift);
  }
  BigInt quotient;
  BigInt remainder;
  divide_qr(num, den, quotient, remainder);
  quotient <<= 1;
  if (remainder != 0) quotient |= 1;
  const double mantissa = quotient.convert_to<double>();
  const long total = exp2 - shift - 1;
  const long clamped = std::clamp<long>(total, INT_MIN / 2, INT_MAX / 2);
  const double magnitude = std::ldexp(mantissa, static_cast<int>(clamped));
  return q < 0 ? -magnitude : magnitude;
}

ExactMoments::ExactMoments(const Sample& sample) : n_(sample.size()) {
  const DyadicLattice lattice = to_lattice(sample.values());
  exponent_ = lattice.exponent;
  for (auto& p : power_sums_) p = 0;
  power_sums_[0] = static_cast<long long>(n_);
  for (const BigInt& m : lattice.mantissas) {
    BigInt power = m;
    for (int k = 1; k <= 4; ++k) {
      power_sums_[k] += power;
      power *= m;
    }
  }
  const Rational count(static_cast<long long>(n_));
  for (int k = 0; k <= 4; ++k) raw_[k] = Rational(power_sums_[k]) / count;

  const Rational& a = raw_[1];
  const Rational a2 = a * a;
  central_[0] = 1;
  central_[1] = 0;
  central_[2] = raw_[2] - a2;
  central_[3] = raw_[3] - 3 * a * raw_[2] + 2 * a2 * a;
  central_[4] = raw_[4] - 4 * a * raw_[3] + 6 * a2 * raw_[2] - 3 * a2 * a2;

  const auto [lo, hi] = std::minmax_element(lattice.mantissas.begin(),
                                            lattice.mantissas.end());
  min_ = Rational(*lo);
  max_ = Rational(*hi);
}

Rational ExactMoments::lift(double value, int degree) const {
  Rational q = exact_rational(value);
  const long shift = -static_cast<long>(degree) * exponent_;
  if (shift > 0) {
    q *= Rational(BigInt(1) << static_cast<unsigned>(shift));
  } else if (shift < 0) {
    q /= Rational(BigInt(1) << static_cast<unsigned>(-shift));
  }
  return q;
}

double ExactMoments::lower(const Rational& q, int degree) const {
  return to_double_scaled(q, static_cast<long>(degree) * exponent_);
}

}  // namespace symmean
