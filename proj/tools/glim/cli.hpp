// Copyright 2026 The glim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLIM_TOOLS_CLI_HPP_
#define GLIM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace glim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerdictFail = 2;

/// Runs one command; `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses TOML text into JSON (tables become objects).
nlohmann::json toml_to_json(const std::string& text);

}  // namespace glim::cli

#endif  // GLIM_TOOLS_CLI_HPP_
