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

#include "symmean/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symmean/error.hpp"

namespace symmean {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kPositivityRequired: return "PositivityRequired";
    case ErrorCode::kDegenerateScale: return "DegenerateScale";
    case ErrorCode::kTooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorCode::kInsufficientN: return "InsufficientN";
    case ErrorCode::kUnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kColumnNotFound: return "ColumnNotFound";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

const char* to_string(Positivity positivity) {
  switch (positivity) {
    case Positivity::kAllPositive: return "AllPositive";
    case Positivity::kNonNegativeWithZero: return "NonNegativeWithZero";
    case Positivity::kMixedSign: return "MixedSign";
  }
  return "Unknown";
}

Sample make_sample(std::span<const double> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::kEmptySample, "sample has no elements");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "non-finite value at index " + std::to_string(i), i);
    }
  }
  const double lowest = *std::min_element(raw.begin(), raw.end());
  Positivity positivity = Positivity::kMixedSign;
  if (lowest > 0.0) {
    positivity = Positivity::kAllPositive;
  } else if (lowest == 0.0) {
    positivity = Positivity::kNonNegativeWithZero;
  }
  return Sample(std::vector<double>(raw.begin(), raw.end()), positivity);
}

}  // namespace symmean
