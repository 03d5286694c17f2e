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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symmean/exact.hpp"
#include "symmean/moments.hpp"
#include "symmean/sample.hpp"
#include "symmean/symmfn.hpp"

namespace symmean {

enum class Status { kHolds, kViolated, kNotApplicable, kDegenerate };

const char* to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

// u <= v is accepted iff u <= v + tau * max(1, |u|, |v|).
struct Tolerance {
  double tau = 1e-9;

  double allowance(double u, double v) const;
  bool accepts(double u, double v) const { return u <= v + allowance(u, v); }
};

struct ChainEntry {
  std::string label;
  double value = 0.0;

  bool operator==(const ChainEntry&) const = default;
};

// Entries are expected to be non-decreasing.
struct BoundChain {
  std::string id;
  std::vector<ChainEntry> entries;
  Status status = Status::kNotApplicable;
  double max_violation = 0.0;  // largest u - v - allowance over adjacent pairs, >= 0
  double min_slack = 0.0;      // smallest v - u over adjacent pairs
  double tolerance = 0.0;
  std::string reason;

  bool operator==(const BoundChain&) const = default;
};

enum class Direction { kLessEqual, kGreaterEqual };

const char* to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view text);

// lhs <= rhs or lhs >= rhs. margin is positive when the bound holds strictly.
struct ScalarBound {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Direction direction = Direction::kLessEqual;
  Status status = Status::kNotApplicable;
  double margin = 0.0;
  double tolerance = 0.0;
  std::string reason;

  bool operator==(const ScalarBound&) const = default;
};

struct TheoremReport {
  std::string theorem_id;
  Status status = Status::kNotApplicable;
  std::string reason;
  std::vector<BoundChain> chains;
  std::vector<ScalarBound> scalar_bounds;

  bool operator==(const TheoremReport&) const = default;

  const BoundChain* chain(std::string_view id) const;
  const ScalarBound* scalar(std::string_view name) const;
};

BoundChain evaluate_chain(std::string id, std::vector<ChainEntry> entries,
                          Tolerance tol);
ScalarBound evaluate_scalar(std::string name, double lhs, double rhs,
                            Direction direction, Tolerance tol);
BoundChain inapplicable_chain(std::string id, Status status, std::string reason);
ScalarBound inapplicable_scalar(std::string name, Direction direction,
                                Status status, std::string reason);

// Holds if every evaluated item holds; Violated if any is violated; otherwise
// Degenerate if any item is degenerate; NotApplicable if nothing was evaluated.
void finalize(TheoremReport& report);

// Everything the theorem evaluators read, computed once per sample.
struct BoundInputs {
  explicit BoundInputs(const Sample& sample);

  Sample sample;
  MomentSummary summary;
  MeanSet means;
  ExactMoments exact;
  std::optional<SymmetricProfile> profile;  // absent for an all-zero sample

  std::size_t n() const noexcept { return sample.size(); }
  bool all_positive() const noexcept { return sample.all_positive(); }
};

// S_k^2 >= S_{k+1} S_{k-1}, k = 1..n-1.
TheoremReport check_newton(const SymmetricProfile& profile, Tolerance tol);
// S_n^(1/n) <= ... <= S_1 (all-positive only).
BoundChain check_maclaurin(const SymmetricProfile& profile, Tolerance tol);

TheoremReport chain_t21(const MeanSet& means, std::size_t n, Tolerance tol);
TheoremReport chain_t22(const BoundInputs& in, Tolerance tol);
TheoremReport chain_t23(const BoundInputs& in, Tolerance tol);
TheoremReport third_moment_bounds(const BoundInputs& in, Tolerance tol);
TheoremReport chain_t25(const BoundInputs& in, Tolerance tol);
TheoremReport chain_t26(const BoundInputs& in, Tolerance tol);
TheoremReport newton_k3_moment(const BoundInputs& in, Tolerance tol);
TheoremReport chain_t28(const BoundInputs& in, Tolerance tol);
TheoremReport skewness_kurtosis(const BoundInputs& in, Tolerance tol);

// Identifiers accepted by evaluate_theorem, in report order:
// newton, maclaurin, T2.1 .. T2.8, skew-kurt.
const std::vector<std::string>& theorem_ids();

// Throws Error(kUnknownTheoremId).
TheoremReport evaluate_theorem(std::string_view id, const BoundInputs& in,
                               Tolerance tol);
std::vector<TheoremReport> evaluate_theorems(std::span<const std::string> ids,
                                             const BoundInputs& in,
                                             Tolerance tol);

}  // namespace symmean
