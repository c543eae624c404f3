// Copyright 2026 The qbluestein Authors
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

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qbluestein/numerics.hpp"

namespace qbluestein::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out` unless --out redirects it to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an input vector document: {"x": [[re, im], ...]} or a bare array;
/// entries may be [re, im] pairs or plain reals. Throws std::invalid_argument.
ComplexVec parse_input_vector(const std::string& text);

/// Thread count from QBA_THREADS (defaults to 1; invalid values ignored).
unsigned threads_from_env();

}  // namespace qbluestein::cli
