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

#include "symmean/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symmean/error.hpp"
#include "symmean/summation.hpp"

namespace symmean {
namespace {

void check_order(int k) {
  if (k < 1 || k > 4) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "moment order " + std::to_string(k) + " outside 1..4");
  }
}

double ipow(double x, int k) {
  double out = x;
  for (int i = 1; i < k; ++i) out *= x;
  return out;
}

double mean_of(const Sample& sample) {
  return compensated_sum(sample.values()) / static_cast<double>(sample.size());
}

double deviation_power_mean(const Sample& sample, double mean, int r) {
  CompensatedSum acc;
  for (double x : sample.values()) acc += ipow(x - mean, r);
  return acc.value() / static_cast<double>(sample.size());
}

}  // namespace

double MeanSet::geometric() const {
  if (!G) {
    throw Error(ErrorCode::kPositivityRequired,
                "geometric mean requires an all-positive sample");
  }
  return *G;
}

double MeanSet::harmonic() const {
  if (!H) {
    throw Error(ErrorCode::kPositivityRequired,
                "harmonic mean requires an all-positive sample");
  }
  return *H;
}

double power_sum(const Sample& sample, int k) {
  check_order(k);
  CompensatedSum acc;
  for (double x : sample.values()) acc += ipow(x, k);
  return acc.value();
}

double raw_moment(const Sample& sample, int r) {
  return power_sum(sample, r) / static_cast<double>(sample.size());
}

double central_moment(const Sample& sample, int r) {
  check_order(r);
  return deviation_power_mean(sample, mean_of(sample), r);
}

MeanSet classical_means(const Sample& sample) {
  MeanSet means;
  means.A = mean_of(sample);
  if (!sample.all_positive()) return means;

  const auto count = static_cast<double>(sample.size());
  const auto [lo, hi] = std::minmax_element(sample.values().begin(), sample.values().end());
  // Logs relative to the maximum vanish for a constant sample, so G is exact
  // there. Both means are kept inside [min, max], where they must lie.
  const double log_hi = std::log(*hi);
  CompensatedSum logs;
  CompensatedSum reciprocals;
  for (double x : sample.values()) {
    logs += std::log(x) - log_hi;
    reciprocals += 1.0 / x;
  }
  means.G = std::clamp(*hi * std::exp(logs.value() / count), *lo, *hi);
  means.H = std::clamp(count / reciprocals.value(), *lo, *hi);
  return means;
}

MomentSummary moment_summary(const Sample& sample) {
  MomentSummary out;
  out.n = sample.size();
  const auto count = static_cast<double>(out.n);
  for (int k = 1; k <= 4; ++k) out.alpha[k - 1] = power_sum(sample, k);
  out.A = out.alpha[0] / count;
  out.m2p = out.alpha[1] / count;
  out.m3p = out.alpha[2] / count;
  out.m4p = out.alpha[3] / count;
  out.s2 = deviation_power_mean(sample, out.A, 2);
  out.s = std::sqrt(out.s2);
  out.m3 = deviation_power_mean(sample, out.A, 3);
  out.m4 = deviation_power_mean(sample, out.A, 4);
  const auto [lo, hi] =
      std::minmax_element(sample.values().begin(), sample.values().end());
  out.min = *lo;
  out.max = *hi;
  return out;
}

}  // namespace symmean
