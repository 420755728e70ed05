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

#include "glim/graph/graph_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace glim {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

template <typename T>
T parse_number(const std::string& tok, std::size_t line_no) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
  }
  return value;
}

}  // namespace

void write_glim(std::ostream& out, const MarkedGraph& g) {
  out << "glim v1 " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (HalfEdgeId e = 0; e < g.half_edge_count(); e += 2) {
    out << g.source(e) << ' ' << g.target(e);
    if (g.has_marks()) {
      const Mark m = g.mark(e);
      out << ' ' << format_double(m.real()) << ' ' << format_double(m.imag());
    }
    out << '\n';
  }
}

MarkedGraph read_glim(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (line[line.find_first_not_of(" \t")] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty graph file");
  const auto header = split_ws(line);
  if (header.size() != 4 || header[0] != "glim" || header[1] != "v1") {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected header 'glim v1 <n> <m>'");
  }
  const auto n = parse_number<std::size_t>(header[2], line_no);
  const auto m = parse_number<std::size_t>(header[3], line_no);

  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  int marked = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    const auto tok = split_ws(line);
    if (tok.size() != 2 && tok.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v' or 'u v re im'");
    }
    const int this_marked = tok.size() == 4 ? 1 : 0;
    if (marked >= 0 && marked != this_marked) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": mixed marked and unmarked edges");
    }
    marked = this_marked;
    EdgeSpec e;
    e.u = parse_number<VertexId>(tok[0], line_no);
    e.v = parse_number<VertexId>(tok[1], line_no);
    if (e.u >= n || e.v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    if (this_marked) {
      e.mark = Mark{parse_number<double>(tok[2], line_no),
                    parse_number<double>(tok[3], line_no)};
    }
    edges.push_back(e);
  }
  if (next_line()) {
    throw ParseError("line " + std::to_string(line_no) + ": trailing data after edges");
  }
  return MarkedGraph::from_edges(n, edges);
}

std::string to_glim_string(const MarkedGraph& g) {
  std::ostringstream out;
  write_glim(out, g);
  return out.str();
}

MarkedGraph from_glim_string(const std::string& text) {
  std::istringstream in(text);
  return read_glim(in);
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  const auto dir = path.has_parent_path() ? path.parent_path()
                                          : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename to " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MarkedGraph load_glim(const std::filesystem::path& path) {
  return from_glim_string(read_file(path));
}

void save_glim(const std::filesystem::path& path, const MarkedGraph& g) {
  write_file_atomic(path, to_glim_string(g));
}

}  // namespace glim
