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

// symmean: moments, classical means and mean-moment inequality reports.
//
//   symmean summary <file> [--format auto|lines|csv|json] [--column C] [--out text|json]
//   symmean bounds  <file> [--theorems T2.1,T2.7,...] [--tol 1e-9] [--out text|json]
//   symmean verify  [--trials N] [--n-min A] [--n-max B] [--range lo:hi] [--seed S]
//
// Exit status: 0 success / all hold, 1 violation, 2 input or configuration error.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmean/bounds.hpp"
#include "symmean/error.hpp"
#include "symmean/ingest.hpp"
#include "symmean/report.hpp"
#include "symmean/verify.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct InputArgs {
  std::string path;
  std::string format = "auto";
  std::optional<std::string> column;
  std::string out = "text";
};

void add_input_args(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("input", args.path, "Input file")->required();
  cmd->add_option("--format", args.format, "Input format")
      ->check(CLI::IsMember({"auto", "lines", "csv", "json"}));
  cmd->add_option("--column", args.column, "CSV column (0-based index or header name)");
  cmd->add_option("--out", args.out, "Output format")->check(CLI::IsMember({"text", "json"}));
}

symmean::IngestedSample load(const InputArgs& args) {
  return symmean::ingest(args.path, *symmean::parse_input_format(args.format),
                         symmean::ColumnSelector{args.column});
}

std::optional<std::pair<double, double>> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  double lo = 0.0;
  double hi = 0.0;
  const std::string a = text.substr(0, colon);
  const std::string b = text.substr(colon + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), lo);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), hi);
  if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() || r2.ec != std::errc() ||
      r2.ptr != b.data() + b.size()) {
    return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmean: symmetric means, sample moments and inequality reports"};
  app.require_subcommand(1);

  InputArgs summary_args;
  CLI::App* summary = app.add_subcommand("summary", "Moments and classical means");
  add_input_args(summary, summary_args);

  InputArgs bounds_args;
  std::vector<std::string> theorems;
  double tol = 1e-9;
  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate every inequality chain");
  add_input_args(bounds, bounds_args);
  bounds->add_option("--theorems", theorems, "Comma-separated theorem ids (default: all)")
      ->delimiter(',');
  bounds->add_option("--tol", tol, "Comparison tolerance tau");

  symmean::VerifyOptions verify_options;
  std::string range = "0.001:1000";
  CLI::App* verify = app.add_subcommand("verify", "Randomized self-verification");
  verify->add_option("--trials", verify_options.trials, "Number of random samples");
  verify->add_option("--n-min", verify_options.n_min, "Smallest sample size");
  verify->add_option("--n-max", verify_options.n_max, "Largest sample size");
  verify->add_option("--range", range, "Value range lo:hi (log-uniform)");
  verify->add_option("--seed", verify_options.seed, "Generator seed");
  verify->add_option("--tol", verify_options.tol, "Comparison tolerance tau");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*summary) {
      const auto input = load(summary_args);
      const char* format = symmean::to_string(input.format);
      if (summary_args.out == "json") {
        std::cout << symmean::summary_json(input.sample, input.source, format).dump(2) << "\n";
      } else {
        std::cout << symmean::render_summary_text(input.sample, input.source, format);
      }
      return 0;
    }
    if (*bounds) {
      if (!(tol > 0.0)) {
        std::cerr << "error: --tol must be positive\n";
        return kExitConfig;
      }
      const auto input = load(bounds_args);
      const auto doc = symmean::make_report(input.sample, {theorems, tol}, input.source,
                                            symmean::to_string(input.format));
      std::cout << (bounds_args.out == "json" ? symmean::render_json(doc)
                                              : symmean::render_text(doc));
      return doc.verdict == symmean::Verdict::kViolated ? kExitViolation : 0;
    }
    if (*verify) {
      const auto parsed = parse_range(range);
      if (!parsed) {
        std::cerr << "error: --range must look like lo:hi\n";
        return kExitConfig;
      }
      verify_options.lo = parsed->first;
      verify_options.hi = parsed->second;
      return symmean::verify_command(verify_options, std::cout, std::cerr);
    }
  } catch (const symmean::Error& e) {
    std::cerr << "error: " << symmean::to_string(e.code()) << ": " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
