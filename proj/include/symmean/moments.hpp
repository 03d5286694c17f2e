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

#include <array>
#include <cstddef>
#include <optional>

#include "symmean/sample.hpp"

namespace symmean {

// Moments of a sample with the divide-by-n convention throughout.
struct MomentSummary {
  std::size_t n = 0;
  std::array<double, 4> alpha{};  // power sums, alpha[k-1] = sum x_i^k
  double A = 0.0;                 // arithmetic mean, m'_1
  double m2p = 0.0;               // raw moments m'_2..m'_4
  double m3p = 0.0;
  double m4p = 0.0;
  double s2 = 0.0;                // variance m_2
  double s = 0.0;
  double m3 = 0.0;                // central moments
  double m4 = 0.0;
  double min = 0.0;
  double max = 0.0;

  bool operator==(const MomentSummary&) const = default;
};

// A always; G and H only for all-positive samples.
struct MeanSet {
  double A = 0.0;
  std::optional<double> G;
  std::optional<double> H;

  // Throw Error(kPositivityRequired) when absent.
  double geometric() const;
  double harmonic() const;

  bool operator==(const MeanSet&) const = default;
};

// sum x_i^k, k in 1..4, compensated, input order.
double power_sum(const Sample& sample, int k);
double raw_moment(const Sample& sample, int r);
// Two-pass: mean first, then compensated sum of (x_i - A)^r.
double central_moment(const Sample& sample, int r);

// G is exp(mean(log x)); H is n / sum(1/x).
MeanSet classical_means(const Sample& sample);

MomentSummary moment_summary(const Sample& sample);

}  // namespace symmean
