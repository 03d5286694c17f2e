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

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "symmean/error.hpp"

namespace symmean {
namespace {

namespace fs = std::filesystem;

const fs::path kData = SYMMEAN_TEST_DATA_DIR;

template <typename F>
const Error capture(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected symmean::Error";
  return Error(ErrorCode::kInvalidConfig, "none");
}

std::vector<double> values_of(const IngestedSample& s) {
  return {s.sample.values().begin(), s.sample.values().end()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(fs::temp_directory_path() / ("symmean_ingest_" + name)) {
    std::ofstream(path_, std::ios::binary) << content;
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(FormatTest, RoundTrip) {
  for (InputFormat f : {InputFormat::kAuto, InputFormat::kLines, InputFormat::kCsv, InputFormat::kJson}) {
    EXPECT_EQ(parse_input_format(to_string(f)), f);
  }
  EXPECT_FALSE(parse_input_format("xml").has_value());
}

TEST(IngestTest, Examples) {
  const IngestedSample lines = ingest(kData / "values.txt", InputFormat::kLines);
  EXPECT_EQ(values_of(lines), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(lines.format, InputFormat::kLines);

  const IngestedSample json = ingest(kData / "values.json", InputFormat::kJson);
  EXPECT_EQ(values_of(json), (std::vector<double>{1, 2, 3, 4}));

  const IngestedSample csv = ingest(kData / "two_columns.csv", InputFormat::kCsv, {"x"});
  EXPECT_EQ(values_of(csv), (std::vector<double>{1, 2}));
}

TEST(IngestTest, AutoDetection) {
  EXPECT_EQ(ingest(kData / "values.txt", InputFormat::kAuto).format, InputFormat::kLines);
  EXPECT_EQ(ingest(kData / "values.json", InputFormat::kAuto).format, InputFormat::kJson);
  EXPECT_EQ(ingest(kData / "two_columns.csv", InputFormat::kAuto).format, InputFormat::kCsv);

  EXPECT_EQ(sniff_format("a.CSV", "1\n"), InputFormat::kCsv);
  EXPECT_EQ(sniff_format("a.json", "1\n"), InputFormat::kJson);
  EXPECT_EQ(sniff_format("a.dat", "  [1,2]"), InputFormat::kJson);
  EXPECT_EQ(sniff_format("a.dat", "a,b\n1,2\n"), InputFormat::kCsv);
  EXPECT_EQ(sniff_format("a.dat", "1\n2\n"), InputFormat::kLines);
}

TEST(IngestTest, UnreadableFile) {
  const Error e = capture([] { ingest(kData / "does_not_exist.txt", InputFormat::kLines); });
  EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
}

TEST(IngestTest, EmptyAndNonFinite) {
  TempFile empty("empty.txt", "\n\n");
  EXPECT_EQ(capture([&] { ingest(empty.path(), InputFormat::kLines); }).code(),
            ErrorCode::kEmptySample);
  TempFile bad("nan.txt", "1\nnan\n");
  const Error e = capture([&] { ingest(bad.path(), InputFormat::kLines); });
  EXPECT_EQ(e.code(), ErrorCode::kNonFiniteValue);
  EXPECT_EQ(e.index(), 1u);
  TempFile huge("huge.txt", "1e999\n");
  EXPECT_EQ(capture([&] { ingest(huge.path(), InputFormat::kLines); }).code(),
            ErrorCode::kNonFiniteValue);
}

TEST(LinesTest, Parsing) {
  EXPECT_EQ(parse_lines("1\n\n  2.5 \r\n+3\n-4e-1"), (std::vector<double>{1, 2.5, 3, -0.4}));
  EXPECT_TRUE(parse_lines("").empty());
  const Error e = capture([] { parse_lines("1\n2\nabc\n"); });
  EXPECT_EQ(e.code(), ErrorCode::kParseError);
  EXPECT_EQ(e.index(), 3u);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  EXPECT_EQ(capture([] { parse_lines("1 2\n"); }).code(), ErrorCode::kParseError);
}

TEST(CsvTest, HeaderDetectionAndSelection) {
  EXPECT_EQ(parse_csv("1,9\n2,8\n", {}), (std::vector<double>{1, 2}));
  EXPECT_EQ(parse_csv("1,9\n2,8\n", {"1"}), (std::vector<double>{9, 8}));
  EXPECT_EQ(parse_csv("x,y\n1,9\n2,8\n", {}), (std::vector<double>{1, 2}));
  EXPECT_EQ(parse_csv("x,y\n1,9\n2,8\n", {"y"}), (std::vector<double>{9, 8}));
  EXPECT_EQ(parse_csv("x,y\r\n1,9\r\n2,8", {"1"}), (std::vector<double>{9, 8}));
  EXPECT_EQ(parse_csv("x , y\n1,9\n\n2,8\n", {"y"}), (std::vector<double>{9, 8}));
}

TEST(CsvTest, Quoting) {
  const std::string text =
      "\"name, with comma\",\"value \"\"v\"\"\"\n"
      "\"a\nb\",\"1.5\"\n"
      "c,\" 2 \"\n";
  EXPECT_EQ(parse_csv(text, {"value \"v\""}), (std::vector<double>{1.5, 2}));
  EXPECT_EQ(parse_csv(text, {"1"}), (std::vector<double>{1.5, 2}));
  EXPECT_EQ(capture([] { parse_csv("x\n\"1", {}); }).code(), ErrorCode::kParseError);
  EXPECT_EQ(capture([] { parse_csv("x\n1\"2\"\n", {}); }).code(), ErrorCode::kParseError);
}

TEST(CsvTest, Errors) {
  EXPECT_EQ(capture([] { parse_csv("x,y\n1,2\n", {"z"}); }).code(), ErrorCode::kColumnNotFound);
  EXPECT_EQ(capture([] { parse_csv("1,2\n", {"2"}); }).code(), ErrorCode::kColumnNotFound);
  EXPECT_EQ(capture([] { parse_csv("1,2\n", {"99999999999999999999999"}); }).code(),
            ErrorCode::kColumnNotFound);
  const Error short_row = capture([] { parse_csv("x,y\n1,2\n3\n", {"y"}); });
  EXPECT_EQ(short_row.code(), ErrorCode::kParseError);
  EXPECT_EQ(short_row.index(), 3u);
  const Error bad = capture([] { parse_csv("x\n1\n2\nzz\n", {"x"}); });
  EXPECT_EQ(bad.code(), ErrorCode::kParseError);
  EXPECT_EQ(bad.index(), 4u);
}

TEST(JsonTest, Parsing) {
  EXPECT_EQ(parse_json_array(" [1, 2.5, -3e2] "), (std::vector<double>{1, 2.5, -300}));
  EXPECT_TRUE(parse_json_array("[]").empty());
  EXPECT_EQ(capture([] { parse_json_array("{\"a\": 1}"); }).code(), ErrorCode::kParseError);
  EXPECT_EQ(capture([] { parse_json_array("[1, \"2\"]"); }).code(), ErrorCode::kParseError);
  EXPECT_EQ(capture([] { parse_json_array("[1, 2"); }).code(), ErrorCode::kParseError);
}

}  // namespace
}  // namespace symmean
