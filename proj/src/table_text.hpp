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

// Internal helpers for the line-oriented table formats. Lines that are
// blank or start with '#' are skipped; every surviving line keeps its
// 1-based position for error reporting.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quandles::detail {

struct TextLine {
  std::string_view text;
  int number;  // 1-based line number in the original input
};

/// Splits into lines, dropping blank lines and '#' comments.
std::vector<TextLine> significant_lines(std::string_view text);

/// Whitespace-separated tokens of one line.
std::vector<std::string_view> tokenize(std::string_view line);

/// Parses a non-negative integer token; throws ParseError on failure.
int parse_index(std::string_view token, int line_number);

/// Parses a row of exactly `width` indices in [0, bound).
std::vector<int> parse_row(const TextLine& line, int width, int bound);

}  // namespace quandles::detail
