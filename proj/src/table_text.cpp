// Copyright 2026 The quandles Authors
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

#include "table_text.hpp"

#include <charconv>

#include "quandles/error.hpp"

namespace quandles::detail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<TextLine> significant_lines(std::string_view text) {
  std::vector<TextLine> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') lines.push_back({line, number});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

int parse_index(std::string_view token, int line_number) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end() || value < 0) {
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(token) + "'",
                     line_number);
  }
  return value;
}

std::vector<int> parse_row(const TextLine& line, int width, int bound) {
  auto tokens = tokenize(line.text);
  if (static_cast<int>(tokens.size()) != width) {
    throw ParseError("expected " + std::to_string(width) +
                         " entries, got " + std::to_string(tokens.size()),
                     line.number);
  }
  std::vector<int> row;
  row.reserve(width);
  for (auto token : tokens) {
    int value = parse_index(token, line.number);
    if (value >= bound) {
      throw ParseError("entry " + std::to_string(value) +
                           " out of range [0, " + std::to_string(bound) + ")",
                       line.number);
    }
    row.push_back(value);
  }
  return row;
}

}  // namespace quandles::detail
