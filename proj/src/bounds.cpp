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

#include "symmean/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "symmean/error.hpp"

namespace symmean {

const char* to_string(Status status) {
  switch (status) {
    case Status::kHolds: return "Holds";
    case Status::kViolated: return "Violated";
    case Status::kNotApplicable: return "NotApplicable";
    case Status::kDegenerate: return "Degenerate";
  }
  return "Unknown";
}

std::optional<Status> parse_status(std::string_view text) {
  for (Status s : {Status::kHolds, Status::kViolated, Status::kNotApplicable,
                   Status::kDegenerate}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

const char* to_string(Direction direction) {
  return direction == Direction::kLessEqual ? "<=" : ">=";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "<=") return Direction::kLessEqual;
  if (text == ">=") return Direction::kGreaterEqual;
  return std::nullopt;
}

double Tolerance::allowance(double u, double v) const {
  return tau * std::max({1.0, std::fabs(u), std::fabs(v)});
}

const BoundChain* TheoremReport::chain(std::string_view id) const {
  for (const BoundChain& c : chains) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const ScalarBound* TheoremReport::scalar(std::string_view name) const {
  for (const ScalarBound& b : scalar_bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

BoundChain evaluate_chain(std::string id, std::vector<ChainEntry> entries,
                          Tolerance tol) {
  BoundChain chain;
  chain.id = std::move(id);
  chain.entries = std::move(entries);
  chain.tolerance = tol.tau;
  for (const ChainEntry& e : chain.entries) {
    if (!std::isfinite(e.value)) {
      chain.status = Status::kDegenerate;
      chain.reason = "entry " + e.label + " is not finite";
      return chain;
    }
  }
  chain.status = Status::kHolds;
  chain.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < chain.entries.size(); ++i) {
    const double u = chain.entries[i].value;
    const double v = chain.entries[i + 1].value;
    chain.min_slack = std::min(chain.min_slack, v - u);
    const double excess = u - v - tol.allowance(u, v);
    if (excess > 0.0) {
      chain.status = Status::kViolated;
      chain.max_violation = std::max(chain.max_violation, excess);
    }
  }
  if (chain.entries.size() < 2) chain.min_slack = 0.0;
  return chain;
}

ScalarBound evaluate_scalar(std::string name, double lhs, double rhs,
                            Direction direction, Tolerance tol) {
  ScalarBound bound;
  bound.name = std::move(name);
  bound.lhs = lhs;
  bound.rhs = rhs;
  bound.direction = direction;
  bound.tolerance = tol.tau;
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
    bound.status = Status::kDegenerate;
    bound.reason = "non-finite side";
    return bound;
  }
  const bool less = direction == Direction::kLessEqual;
  bound.margin = less ? rhs - lhs : lhs - rhs;
  const bool ok = less ? tol.accepts(lhs, rhs) : tol.accepts(rhs, lhs);
  bound.status = ok ? Status::kHolds : Status::kViolated;
  return bound;
}

BoundChain inapplicable_chain(std::string id, Status status, std::string reason) {
  BoundChain chain;
  chain.id = std::move(id);
  chain.status = status;
  chain.reason = std::move(reason);
  return chain;
}

ScalarBound inapplicable_scalar(std::string name, Direction direction,
                                Status status, std::string reason) {
  ScalarBound bound;
  bound.name = std::move(name);
  bound.direction = direction;
  bound.status = status;
  bound.reason = std::move(reason);
  return bound;
}

void finalize(TheoremReport& report) {
  bool any_evaluated = false;
  bool any_violated = false;
  bool any_degenerate = false;
  std::string first_reason;
  auto visit = [&](Status s, const std::string& reason) {
    if (s == Status::kNotApplicable) {
      if (first_reason.empty()) first_reason = reason;
      return;
    }
    any_evaluated = true;
    any_violated |= s == Status::kViolated;
    if (s == Status::kDegenerate) {
      any_degenerate = true;
      if (first_reason.empty()) first_reason = reason;
    }
  };
  for (const BoundChain& c : report.chains) visit(c.status, c.reason);
  for (const ScalarBound& b : report.scalar_bounds) visit(b.status, b.reason);

  report.reason.clear();
  if (any_violated) {
    report.status = Status::kViolated;
  } else if (any_degenerate) {
    report.status = Status::kDegenerate;
    report.reason = first_reason;
  } else if (any_evaluated) {
    report.status = Status::kHolds;
  } else {
    report.status = Status::kNotApplicable;
    report.reason = first_reason;
  }
}

BoundInputs::BoundInputs(const Sample& s)
    : sample(s),
      summary(moment_summary(s)),
      means(classical_means(s)),
      exact(s) {
  try {
    profile = esf_dp(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateScale) throw;
  }
}

TheoremReport check_newton(const SymmetricProfile& profile, Tolerance tol) {
  TheoremReport report;
  report.theorem_id = "newton";
  const std::size_t n = profile.n;
  if (n < 2) {
    report.scalar_bounds.push_back(inapplicable_scalar(
        "newton.k1", Direction::kGreaterEqual, Status::kNotApplicable,
        "requires n >= 2"));
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    const double lhs = profile.S[k] * profile.S[k];
    const double rhs = profile.S[k + 1] * profile.S[k - 1];
    report.scalar_bounds.push_back(evaluate_scalar(
        "newton.k" + std::to_string(k), lhs, rhs, Direction::kGreaterEqual, tol));
  }
  finalize(report);
  return report;
}

BoundChain check_maclaurin(const SymmetricProfile& profile, Tolerance tol) {
  if (profile.positivity != Positivity::kAllPositive) {
    return inapplicable_chain("maclaurin", Status::kNotApplicable,
                              "requires an all-positive sample");
  }
  std::vector<ChainEntry> entries;
  for (std::size_t k = profile.n; k >= 1; --k) {
    const std::string label =
        "S_" + std::to_string(k) + "^(1/" + std::to_string(k) + ")";
    if (!profile.M[k]) {
      return inapplicable_chain("maclaurin", Status::kDegenerate,
                                label + " underflowed to zero");
    }
    entries.push_back({label, *profile.M[k]});
  }
  return evaluate_chain("maclaurin", std::move(entries), tol);
}

TheoremReport chain_t21(const MeanSet& means, std::size_t n, Tolerance tol) {
  TheoremReport report;
  report.theorem_id = "T2.1";
  const char* ids[] = {"T2.1", "T2.1.A", "T2.1.H"};
  auto all_inapplicable = [&](Status status, const std::string& reason) {
    for (const char* id : ids) {
      report.chains.push_back(inapplicable_chain(id, status, reason));
    }
    finalize(report);
    return report;
  };
  if (!means.G || !means.H) {
    return all_inapplicable(Status::kNotApplicable,
                            "requires an all-positive sample");
  }
  if (n < 2) return all_inapplicable(Status::kDegenerate, "n = 1: chains collapse");

  const double nd = static_cast<double>(n);
  const double a = means.A;
  const double g = *means.G;
  const double h = *means.H;
  const double la = std::log(a);
  const double lg = std::log(g);
  const double lh = std::log(h);

  report.chains.push_back(evaluate_chain(
      "T2.1",
      {{"H", h},
       {"H(A/H)^(1/n)", std::exp(lh + (la - lh) / nd)},
       {"G", g},
       {"A(H/A)^(1/n)", std::exp(la + (lh - la) / nd)},
       {"A", a}},
      tol));
  report.chains.push_back(evaluate_chain(
      "T2.1.A",
      {{"(G/H)^(1/(n-1))G", std::exp(lg + (lg - lh) / (nd - 1.0))},
       {"A", a},
       {"(G/H)^(n-1)G", std::exp(lg + (nd - 1.0) * (lg - lh))}},
      tol));
  report.chains.push_back(evaluate_chain(
      "T2.1.H",
      {{"(G/A)^(n-1)G", std::exp(lg + (nd - 1.0) * (lg - la))},
       {"H", h},
       {"(G/A)^(1/(n-1))G", std::exp(lg + (lg - la) / (nd - 1.0))}},
      tol));
  finalize(report);
  return report;
}

}  // namespace symmean
