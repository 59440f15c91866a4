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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quandles/quandle.hpp"

namespace quandles::cli {

/// Dispatches one subcommand. args excludes the program name. Returns 0
/// on success, 1 on domain errors (and the not-found/violation outcomes),
/// 2 on usage errors. All output is deterministic.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

/// Reads a quandle from a file, or from `in` when path is "-", and checks
/// the axioms on load. Throws ParseError or Error (axiom violation).
Quandle load_quandle_file(const std::string& path, std::istream& in);

std::string usage();

}  // namespace quandles::cli
