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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symmean/bounds.hpp"
#include "symmean/moments.hpp"
#include "symmean/sample.hpp"

namespace symmean {

enum class Verdict { kHolds, kViolated, kPartial };

const char* to_string(Verdict verdict);

struct ReportOptions {
  std::vector<std::string> theorems;  // empty means all, in theorem_ids() order
  double tol = 1e-9;
};

struct ReportDocument {
  std::string source;
  std::string format;
  std::string positivity;
  MomentSummary summary;
  MeanSet means;
  std::vector<std::optional<double>> maclaurin_profile;  // M_1..M_n
  std::vector<TheoremReport> theorems;
  double tolerance = 1e-9;
  Verdict verdict = Verdict::kHolds;

  bool operator==(const ReportDocument&) const = default;
};

// Violated iff any evaluated item is Violated; Partial iff none is violated
// and at least one is Degenerate; Holds otherwise.
Verdict compute_verdict(const std::vector<TheoremReport>& theorems);

// Throws Error(kUnknownTheoremId) before evaluating anything.
ReportDocument make_report(const Sample& sample, const ReportOptions& options,
                           std::string source = {}, std::string format = {});

// Keys sorted, chain entries in chain order, doubles in shortest round-trip
// form; non-finite values as the strings "inf", "-inf", "nan".
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);  // throws kParseError

std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);

// `summary` subcommand: moments and means only.
nlohmann::json summary_json(const Sample& sample, std::string_view source,
                            std::string_view format);
std::string render_summary_text(const Sample& sample, std::string_view source,
                                std::string_view format);

}  // namespace symmean
