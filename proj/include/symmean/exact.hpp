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

#pragma once

// Exact arithmetic on binary64 samples.
//
// Every finite double is a dyadic rational m * 2^e. Rewriting a whole sample
// over its smallest exponent E gives integers M_i with x_i = M_i * 2^E, so any
// homogeneous polynomial of degree d in the sample equals an exact rational in
// "lattice units" times 2^(d*E). Moment-form identities are evaluated this way
// because in binary64 they cancel catastrophically on spread-out data.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symmean/sample.hpp"

namespace symmean {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DyadicLattice {
  std::vector<BigInt> mantissas;  // x_i = mantissas[i] * 2^exponent
  long exponent = 0;
};

DyadicLattice to_lattice(std::span<const double> values);

// Exact value of a finite double.
Rational exact_rational(double value);

// q * 2^exp2 rounded to double (overflow gives +-inf, underflow gives 0).
double to_double_scaled(const Rational& q, long exp2);
inline double to_double(const Rational& q) { return to_double_scaled(q, 0); }

// Exact power sums, raw moments and central moments of a sample, orders 0..4,
// all stored in lattice units.
class ExactMoments {
 public:
  explicit ExactMoments(const Sample& sample);

  std::size_t n() const noexcept { return n_; }
  long exponent() const noexcept { return exponent_; }

  const BigInt& power_sum(int k) const { return power_sums_.at(k); }
  const Rational& mean() const { return raw_[1]; }
  const Rational& raw(int r) const { return raw_.at(r); }
  const Rational& central(int r) const { return central_.at(r); }
  const Rational& min() const { return min_; }
  const Rational& max() const { return max_; }

  // double of the given degree -> lattice units (exact).
  Rational lift(double value, int degree) const;
  // lattice units of the given degree -> double.
  double lower(const Rational& q, int degree) const;

 private:
  std::size_t n_;
  long exponent_;
  std::array<BigInt, 5> power_sums_;
  std::array<Rational, 5> raw_;
  std::array<Rational, 5> central_;
  Rational min_;
  Rational max_;
};

}  // namespace symmean
