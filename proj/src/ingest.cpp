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

#include "symmean/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "symmean/error.hpp"

namespace symmean {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ptr != token.data() + token.size()) return std::nullopt;
  if (ec == std::errc::result_out_of_range) {
    // strtod saturates to +-inf (or flushes to zero), so validation sees it.
    return std::strtod(std::string(token).c_str(), nullptr);
  }
  if (ec != std::errc()) return std::nullopt;
  return value;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what, line);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c)) != 0;
         });
}

struct CsvRow {
  std::size_t line;  // 1-based line on which the row starts
  std::vector<std::string> fields;
};

std::vector<CsvRow> split_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row{1, {}};
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  bool row_has_content = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.fields.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    if (row_has_content) {
      end_field();
      rows.push_back(std::move(row));
    }
    field.clear();
    field_was_quoted = false;
    row = CsvRow{line, {}};
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!trim(field).empty() || field_was_quoted) {
          parse_error(line, "unexpected quote inside unquoted field");
        }
        field.clear();
        quoted = true;
        field_was_quoted = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field.push_back(c);
        if (!std::isspace(static_cast<unsigned char>(c))) row_has_content = true;
        break;
    }
  }
  if (quoted) parse_error(line, "unterminated quoted field");
  end_row();
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidConfig, "cannot read input file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

const char* to_string(InputFormat format) {
  switch (format) {
    case InputFormat::kAuto: return "auto";
    case InputFormat::kLines: return "lines";
    case InputFormat::kCsv: return "csv";
    case InputFormat::kJson: return "json";
  }
  return "unknown";
}

std::optional<InputFormat> parse_input_format(std::string_view text) {
  for (InputFormat f : {InputFormat::kAuto, InputFormat::kLines, InputFormat::kCsv,
                        InputFormat::kJson}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

std::vector<double> parse_lines(std::string_view text) {
  std::vector<double> values;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t end = text.find('\n');
    const std::string_view raw = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    const std::string_view token = trim(raw);
    if (token.empty()) continue;
    const auto value = parse_number(token);
    if (!value) parse_error(line, "not a number: '" + std::string(token) + "'");
    values.push_back(*value);
  }
  return values;
}

std::vector<double> parse_csv(std::string_view text, const ColumnSelector& column) {
  const std::vector<CsvRow> rows = split_csv(text);
  if (rows.empty()) return {};

  std::size_t index = 0;
  bool has_header = false;
  if (column.spec && !all_digits(*column.spec)) {
    has_header = true;
    const auto& header = rows.front().fields;
    const auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) {
      return trim(h) == *column.spec;
    });
    if (it == header.end()) {
      throw Error(ErrorCode::kColumnNotFound, "column '" + *column.spec + "' not in header");
    }
    index = static_cast<std::size_t>(it - header.begin());
  } else {
    if (column.spec) {
      const std::string& spec = *column.spec;
      if (std::from_chars(spec.data(), spec.data() + spec.size(), index).ec != std::errc()) {
        throw Error(ErrorCode::kColumnNotFound, "column index " + spec + " out of range");
      }
    }
    const auto& first = rows.front().fields;
    if (index >= first.size()) {
      throw Error(ErrorCode::kColumnNotFound,
                  "column index " + std::to_string(index) + " out of range");
    }
    has_header = !parse_number(first[index]).has_value();
  }

  std::vector<double> values;
  for (std::size_t r = has_header ? 1 : 0; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (index >= row.fields.size()) parse_error(row.line, "missing column");
    const auto value = parse_number(row.fields[index]);
    if (!value) parse_error(row.line, "not a number: '" + row.fields[index] + "'");
    values.push_back(*value);
  }
  return values;
}

std::vector<double> parse_json_array(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "invalid JSON at byte " + std::to_string(e.byte), e.byte);
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::kParseError, "JSON input must be an array of numbers");
  }
  std::vector<double> values;
  values.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number()) {
      throw Error(ErrorCode::kParseError,
                  "JSON element " + std::to_string(i) + " is not a number", i);
    }
    values.push_back(doc[i].get<double>());
  }
  return values;
}

InputFormat sniff_format(const std::filesystem::path& path, std::string_view content) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".csv") return InputFormat::kCsv;
  if (ext == ".json") return InputFormat::kJson;

  const std::string_view body = trim(content);
  if (!body.empty() && body.front() == '[') return InputFormat::kJson;
  const std::string_view first_line = body.substr(0, body.find('\n'));
  if (first_line.find_first_of(",\"") != std::string_view::npos) return InputFormat::kCsv;
  return InputFormat::kLines;
}

IngestedSample ingest(const std::filesystem::path& path, InputFormat format,
                      const ColumnSelector& column) {
  const std::string content = read_file(path);
  if (format == InputFormat::kAuto) format = sniff_format(path, content);
  std::vector<double> values;
  switch (format) {
    case InputFormat::kLines: values = parse_lines(content); break;
    case InputFormat::kCsv: values = parse_csv(content, column); break;
    case InputFormat::kJson: values = parse_json_array(content); break;
    case InputFormat::kAuto: break;
  }
  return IngestedSample{path.string(), format, make_sample(values)};
}

}  // namespace symmean
