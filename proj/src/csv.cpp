// Copyright 2026 The hotelling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csv.hpp"

#include <charconv>
#include <cmath>

#include "hotelling/error.hpp"

namespace hotelling::internal {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

double ParseNumber(std::string_view field, int line) {
  field = Trim(field);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    Fail(line, "not a finite number: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

CsvColumns ReadTwoColumnCsv(std::istream& in, std::string_view expected_header) {
  CsvColumns out;
  std::string raw;
  int line = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = Trim(raw);
    if (!saw_header) {
      if (text != expected_header) {
        Fail(line, "expected header '" + std::string(expected_header) + "'");
      }
      saw_header = true;
      continue;
    }
    if (text.empty()) continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos ||
        text.find(',', comma + 1) != std::string_view::npos) {
      Fail(line, "expected exactly two comma-separated fields");
    }
    out.first.push_back(ParseNumber(text.substr(0, comma), line));
    out.second.push_back(ParseNumber(text.substr(comma + 1), line));
    out.line.push_back(line);
  }
  if (!saw_header) Fail(1, "empty input, expected header");
  return out;
}

}  // namespace hotelling::internal
