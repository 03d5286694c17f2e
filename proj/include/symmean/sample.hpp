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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symmean {

enum class Positivity {
  kAllPositive,          // min > 0
  kNonNegativeWithZero,  // min == 0
  kMixedSign,            // min < 0
};

const char* to_string(Positivity positivity);

// A validated, immutable, non-empty sequence of finite doubles. Input order is
// preserved; nothing is sorted or deduplicated.
class Sample {
 public:
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  Positivity positivity() const noexcept { return positivity_; }
  bool all_positive() const noexcept {
    return positivity_ == Positivity::kAllPositive;
  }

 private:
  friend Sample make_sample(std::span<const double> raw);

  Sample(std::vector<double> values, Positivity positivity)
      : values_(std::move(values)), positivity_(positivity) {}

  std::vector<double> values_;
  Positivity positivity_;
};

// Throws Error(kEmptySample) or Error(kNonFiniteValue, index).
Sample make_sample(std::span<const double> raw);

inline Sample make_sample(std::initializer_list<double> raw) {
  return make_sample(std::span<const double>(raw.begin(), raw.size()));
}

}  // namespace symmean
