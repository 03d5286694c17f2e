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
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "symmean/sample.hpp"

namespace symmean {

struct VerifyOptions {
  std::uint64_t trials = 1000;
  std::size_t n_min = 4;
  std::size_t n_max = 16;
  double lo = 1e-3;
  double hi = 1e3;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

inline constexpr double kEsfAgreement = 1e-10;      // DP vs Newton vs subsets
inline constexpr double kMomentFormAgreement = 1e-9; // moment forms vs DP
inline constexpr std::size_t kBruteForceCheckN = 12;

// Throws Error(kInvalidConfig).
void validate(const VerifyOptions& options);

// Trial t draws from mt19937_64 seeded with splitmix64(seed + t), so any trial
// can be replayed on its own. n is uniform in [n_min, n_max]; values are
// log-uniform in [lo, hi].
std::vector<double> trial_sample(const VerifyOptions& options, std::uint64_t trial);

struct CheckOutcome {
  std::uint64_t checks = 0;
  std::optional<std::string> failure;  // first failing check, with detail
};

// Every applicable theorem must report Holds; the three elementary symmetric
// pathways must agree; moment-form right-hand sides must match the DP's M_k.
CheckOutcome check_sample(const Sample& sample, double tol);

struct VerifyFailure {
  std::uint64_t trial = 0;
  std::string detail;
  std::vector<double> sample;
};

struct VerifyResult {
  std::uint64_t checks = 0;
  std::optional<VerifyFailure> failure;  // lowest failing trial index
};

VerifyResult run_verify(const VerifyOptions& options, unsigned threads = 0);

// Prints the run header and result; returns the process exit code
// (0 all hold, 1 violation, 2 configuration error).
int verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace symmean
