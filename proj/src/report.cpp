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

#include "symmean/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "symmean/error.hpp"
#include "symmean/symmfn.hpp"

namespace symmean {
namespace {

using nlohmann::json;

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : json(nullptr);
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
  }
  throw Error(ErrorCode::kParseError, "expected a number in report JSON");
}

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return read_number(j);
}

Status read_status(const json& j) {
  const auto s = parse_status(j.get<std::string>());
  if (!s) throw Error(ErrorCode::kParseError, "unknown status in report JSON");
  return *s;
}

json chain_json(const BoundChain& c) {
  json entries = json::array();
  for (const ChainEntry& e : c.entries) {
    entries.push_back({{"label", e.label}, {"value", number(e.value)}});
  }
  return {{"id", c.id},
          {"entries", entries},
          {"status", to_string(c.status)},
          {"max_violation", number(c.max_violation)},
          {"min_slack", number(c.min_slack)},
          {"tolerance", number(c.tolerance)},
          {"reason", c.reason}};
}

BoundChain chain_from(const json& j) {
  BoundChain c;
  c.id = j.at("id").get<std::string>();
  for (const json& e : j.at("entries")) {
    c.entries.push_back({e.at("label").get<std::string>(), read_number(e.at("value"))});
  }
  c.status = read_status(j.at("status"));
  c.max_violation = read_number(j.at("max_violation"));
  c.min_slack = read_number(j.at("min_slack"));
  c.tolerance = read_number(j.at("tolerance"));
  c.reason = j.at("reason").get<std::string>();
  return c;
}

json scalar_json(const ScalarBound& b) {
  return {{"name", b.name},
          {"lhs", number(b.lhs)},
          {"rhs", number(b.rhs)},
          {"direction", to_string(b.direction)},
          {"status", to_string(b.status)},
          {"margin", number(b.margin)},
          {"tolerance", number(b.tolerance)},
          {"reason", b.reason}};
}

ScalarBound scalar_from(const json& j) {
  ScalarBound b;
  b.name = j.at("name").get<std::string>();
  b.lhs = read_number(j.at("lhs"));
  b.rhs = read_number(j.at("rhs"));
  const auto d = parse_direction(j.at("direction").get<std::string>());
  if (!d) throw Error(ErrorCode::kParseError, "unknown direction in report JSON");
  b.direction = *d;
  b.status = read_status(j.at("status"));
  b.margin = read_number(j.at("margin"));
  b.tolerance = read_number(j.at("tolerance"));
  b.reason = j.at("reason").get<std::string>();
  return b;
}

json summary_fields(const MomentSummary& s) {
  json alpha = json::array();
  for (double a : s.alpha) alpha.push_back(number(a));
  return {{"n", s.n},        {"alpha", alpha},       {"A", number(s.A)},
          {"m2p", number(s.m2p)}, {"m3p", number(s.m3p)}, {"m4p", number(s.m4p)},
          {"s2", number(s.s2)},   {"s", number(s.s)},     {"m3", number(s.m3)},
          {"m4", number(s.m4)},   {"min", number(s.min)}, {"max", number(s.max)}};
}

MomentSummary summary_from(const json& j) {
  MomentSummary s;
  s.n = j.at("n").get<std::size_t>();
  const json& alpha = j.at("alpha");
  for (std::size_t k = 0; k < s.alpha.size(); ++k) s.alpha[k] = read_number(alpha.at(k));
  s.A = read_number(j.at("A"));
  s.m2p = read_number(j.at("m2p"));
  s.m3p = read_number(j.at("m3p"));
  s.m4p = read_number(j.at("m4p"));
  s.s2 = read_number(j.at("s2"));
  s.s = read_number(j.at("s"));
  s.m3 = read_number(j.at("m3"));
  s.m4 = read_number(j.at("m4"));
  s.min = read_number(j.at("min"));
  s.max = read_number(j.at("max"));
  return s;
}

json means_fields(const MeanSet& m) {
  return {{"A", number(m.A)}, {"G", optional_number(m.G)}, {"H", optional_number(m.H)}};
}

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt9(const std::optional<double>& v) { return v ? fmt9(*v) : "n/a"; }

void write_summary_text(std::ostringstream& out, const MomentSummary& s, const MeanSet& m) {
  out << "n = " << s.n << "\n";
  out << "power sums: " << fmt9(s.alpha[0]) << " " << fmt9(s.alpha[1]) << " "
      << fmt9(s.alpha[2]) << " " << fmt9(s.alpha[3]) << "\n";
  out << "A = " << fmt9(s.A) << "  G = " << fmt9(m.G) << "  H = " << fmt9(m.H) << "\n";
  out << "raw moments: m'_2 = " << fmt9(s.m2p) << "  m'_3 = " << fmt9(s.m3p)
      << "  m'_4 = " << fmt9(s.m4p) << "\n";
  out << "central moments: s^2 = " << fmt9(s.s2) << "  s = " << fmt9(s.s)
      << "  m_3 = " << fmt9(s.m3) << "  m_4 = " << fmt9(s.m4) << "\n";
  out << "range: [" << fmt9(s.min) << ", " << fmt9(s.max) << "]\n";
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "Holds";
    case Verdict::kViolated: return "Violated";
    case Verdict::kPartial: return "Partial";
  }
  return "Unknown";
}

Verdict compute_verdict(const std::vector<TheoremReport>& theorems) {
  bool degenerate = false;
  for (const TheoremReport& t : theorems) {
    for (const BoundChain& c : t.chains) {
      if (c.status == Status::kViolated) return Verdict::kViolated;
      degenerate |= c.status == Status::kDegenerate;
    }
    for (const ScalarBound& b : t.scalar_bounds) {
      if (b.status == Status::kViolated) return Verdict::kViolated;
      degenerate |= b.status == Status::kDegenerate;
    }
  }
  return degenerate ? Verdict::kPartial : Verdict::kHolds;
}

ReportDocument make_report(const Sample& sample, const ReportOptions& options,
                           std::string source, std::string format) {
  const std::vector<std::string> ids =
      options.theorems.empty() ? theorem_ids() : options.theorems;
  const BoundInputs inputs(sample);
  const Tolerance tol{options.tol};

  ReportDocument doc;
  doc.source = std::move(source);
  doc.format = std::move(format);
  doc.positivity = to_string(sample.positivity());
  doc.summary = inputs.summary;
  doc.means = inputs.means;
  doc.theorems = evaluate_theorems(ids, inputs, tol);
  if (inputs.profile) {
    doc.maclaurin_profile.assign(inputs.profile->M.begin() + 1, inputs.profile->M.end());
  } else {
    doc.maclaurin_profile.assign(sample.size(), std::nullopt);
  }
  doc.tolerance = options.tol;
  doc.verdict = compute_verdict(doc.theorems);
  return doc;
}

nlohmann::json to_json(const ReportDocument& doc) {
  json profile = json::array();
  for (const auto& m : doc.maclaurin_profile) profile.push_back(optional_number(m));
  json theorems = json::array();
  for (const TheoremReport& t : doc.theorems) {
    json chains = json::array();
    for (const BoundChain& c : t.chains) chains.push_back(chain_json(c));
    json scalars = json::array();
    for (const ScalarBound& b : t.scalar_bounds) scalars.push_back(scalar_json(b));
    theorems.push_back({{"id", t.theorem_id},
                        {"status", to_string(t.status)},
                        {"reason", t.reason},
                        {"chains", chains},
                        {"scalar_bounds", scalars}});
  }
  return {{"input", {{"source", doc.source}, {"format", doc.format}}},
          {"positivity", doc.positivity},
          {"summary", summary_fields(doc.summary)},
          {"means", means_fields(doc.means)},
          {"maclaurin_profile", profile},
          {"theorems", theorems},
          {"tolerance", number(doc.tolerance)},
          {"verdict", to_string(doc.verdict)}};
}

ReportDocument report_from_json(const nlohmann::json& j) {
  try {
    ReportDocument doc;
    doc.source = j.at("input").at("source").get<std::string>();
    doc.format = j.at("input").at("format").get<std::string>();
    doc.positivity = j.at("positivity").get<std::string>();
    doc.summary = summary_from(j.at("summary"));
    const json& means = j.at("means");
    doc.means.A = read_number(means.at("A"));
    doc.means.G = read_optional(means.at("G"));
    doc.means.H = read_optional(means.at("H"));
    for (const json& m : j.at("maclaurin_profile")) {
      doc.maclaurin_profile.push_back(read_optional(m));
    }
    for (const json& t : j.at("theorems")) {
      TheoremReport report;
      report.theorem_id = t.at("id").get<std::string>();
      report.status = read_status(t.at("status"));
      report.reason = t.at("reason").get<std::string>();
      for (const json& c : t.at("chains")) report.chains.push_back(chain_from(c));
      for (const json& b : t.at("scalar_bounds")) {
        report.scalar_bounds.push_back(scalar_from(b));
      }
      doc.theorems.push_back(std::move(report));
    }
    doc.tolerance = read_number(j.at("tolerance"));
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "Holds") {
      doc.verdict = Verdict::kHolds;
    } else if (verdict == "Violated") {
      doc.verdict = Verdict::kViolated;
    } else if (verdict == "Partial") {
      doc.verdict = Verdict::kPartial;
    } else {
      throw Error(ErrorCode::kParseError, "unknown verdict '" + verdict + "'");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report JSON: ") + e.what());
  }
}

std::string render_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "source: " << (doc.source.empty() ? "-" : doc.source);
  if (!doc.format.empty()) out << " (" << doc.format << ")";
  out << "\npositivity: " << doc.positivity << "\n";
  write_summary_text(out, doc.summary, doc.means);

  constexpr std::size_t kShownProfile = 16;
  out << "maclaurin profile:";
  for (std::size_t k = 0; k < doc.maclaurin_profile.size() && k < kShownProfile; ++k) {
    out << " " << fmt9(doc.maclaurin_profile[k]);
  }
  if (doc.maclaurin_profile.size() > kShownProfile) {
    out << " ... (" << doc.maclaurin_profile.size() << " total)";
  }
  out << "\ntolerance: " << fmt9(doc.tolerance) << "\n\n";

  for (const TheoremReport& t : doc.theorems) {
    out << "[" << t.theorem_id << "] " << to_string(t.status);
    if (!t.reason.empty()) out << " (" << t.reason << ")";
    out << "\n";
    for (const BoundChain& c : t.chains) {
      out << "  chain " << c.id << ": " << to_string(c.status);
      if (!c.reason.empty()) out << " (" << c.reason << ")";
      out << "\n";
      for (std::size_t i = 0; i < c.entries.size(); ++i) {
        out << "    " << (i == 0 ? "   " : "<= ") << c.entries[i].label << " = "
            << fmt9(c.entries[i].value) << "\n";
      }
      if (c.status == Status::kViolated) {
        out << "    max violation: " << fmt9(c.max_violation) << "\n";
      }
    }
    for (const ScalarBound& b : t.scalar_bounds) {
      out << "  bound " << b.name << ": " << to_string(b.status);
      if (b.status == Status::kHolds || b.status == Status::kViolated) {
        out << "  " << fmt9(b.lhs) << " " << to_string(b.direction) << " "
            << fmt9(b.rhs) << "  (margin " << fmt9(b.margin) << ")";
      }
      if (!b.reason.empty()) out << " (" << b.reason << ")";
      out << "\n";
    }
  }
  out << "\nverdict: " << to_string(doc.verdict) << "\n";
  return out.str();
}

nlohmann::json summary_json(const Sample& sample, std::string_view source,
                            std::string_view format) {
  return {{"input", {{"source", std::string(source)}, {"format", std::string(format)}}},
          {"positivity", to_string(sample.positivity())},
          {"summary", summary_fields(moment_summary(sample))},
          {"means", means_fields(classical_means(sample))}};
}

std::string render_summary_text(const Sample& sample, std::string_view source,
                                std::string_view format) {
  std::ostringstream out;
  out << "source: " << (source.empty() ? "-" : std::string(source));
  if (!format.empty()) out << " (" << format << ")";
  out << "\npositivity: " << to_string(sample.positivity()) << "\n";
  write_summary_text(out, moment_summary(sample), classical_means(sample));
  return out.str();
}

}  // namespace symmean
