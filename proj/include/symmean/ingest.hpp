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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symmean/sample.hpp"

namespace symmean {

enum class InputFormat { kAuto, kLines, kCsv, kJson };

const char* to_string(InputFormat format);
std::optional<InputFormat> parse_input_format(std::string_view text);

// A column is selected by 0-based index when the text is all digits,
// otherwise by header name.
struct ColumnSelector {
  std::optional<std::string> spec;
};

struct IngestedSample {
  std::string source;
  InputFormat format;  // resolved, never kAuto
  Sample sample;
};

// One number per line; blank lines skipped.
std::vector<double> parse_lines(std::string_view text);
// RFC-4180-style CSV; the header row is optional unless a column is named.
std::vector<double> parse_csv(std::string_view text, const ColumnSelector& column);
// A top-level JSON array of numbers.
std::vector<double> parse_json_array(std::string_view text);

// By extension (.csv, .json), then by content.
InputFormat sniff_format(const std::filesystem::path& path, std::string_view content);

// Errors: kParseError (with line), kColumnNotFound, kEmptySample,
// kNonFiniteValue, kInvalidConfig (unreadable file).
IngestedSample ingest(const std::filesystem::path& path, InputFormat format,
                      const ColumnSelector& column = {});

}  // namespace symmean
