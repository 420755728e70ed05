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

#ifndef GLIM_GRAPH_GRAPH_IO_HPP_
#define GLIM_GRAPH_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "glim/graph/marked_graph.hpp"

namespace glim {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//
//   glim v1 <n> <m>
//   u v [re im]        (m lines, one per unordered edge)
//
// The optional mark belongs to half-edge u->v; v->u gets the conjugate. A
// file is either fully marked or fully unmarked. Doubles are written with
// 17 significant digits so write -> read -> write is byte-identical.

void write_glim(std::ostream& out, const MarkedGraph& g);
MarkedGraph read_glim(std::istream& in);

std::string to_glim_string(const MarkedGraph& g);
MarkedGraph from_glim_string(const std::string& text);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);
std::string read_file(const std::filesystem::path& path);

MarkedGraph load_glim(const std::filesystem::path& path);
void save_glim(const std::filesystem::path& path, const MarkedGraph& g);

}  // namespace glim

#endif  // GLIM_GRAPH_GRAPH_IO_HPP_
