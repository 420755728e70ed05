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

// Canonical codes by individualization-refinement.
//
// Colours are refined to the coarsest equitable partition (1-WL with edge
// labels and multiplicities). If that is not discrete, the first
// non-singleton cell is split by individualizing each of its vertices in
// turn; leaves of this search tree are orderings, and the canonical code is
// the smallest leaf code. Two leaves with equal codes give an automorphism,
// used both to jump back to the common ancestor with the first/best leaf and
// to skip children lying in an already explored orbit.

#include "glim/graph/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace glim {
namespace detail {
namespace {

using Colours = std::vector<std::uint32_t>;

void put_u32(std::string& out, std::uint32_t x) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xff));
}

void put_u64(std::string& out, std::uint64_t x) {
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xff));
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Arc {
  std::uint32_t to;
  std::uint64_t out_label;
  std::uint64_t in_label;
};

class Search {
 public:
  Search(const LabelledGraph& g, const CanonicalOptions& options)
      : g_(g), options_(options), n_(g.vertex_labels.size()), adj_(n_) {
    for (const auto& e : g.edges) {
      adj_[e.u].push_back({e.v, e.label_uv, e.label_vu});
      adj_[e.v].push_back({e.u, e.label_vu, e.label_uv});
    }
  }

  // Coarsest equitable refinement of `c`; colours renamed to ranks.
  Colours refine(const Colours& start) const {
    Colours c = rank(start);
    std::size_t cells = count_cells(c);
    using Sig = std::pair<std::uint32_t, std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint64_t>>>;
    std::vector<Sig> sig(n_);
    while (cells < n_) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        sig[v].first = c[v];
        auto& nb = sig[v].second;
        nb.clear();
        for (const Arc& a : adj_[v]) nb.emplace_back(c[a.to], a.out_label, a.in_label);
        std::sort(nb.begin(), nb.end());
      }
      std::vector<std::uint32_t> idx(n_);
      std::iota(idx.begin(), idx.end(), 0u);
      std::sort(idx.begin(), idx.end(),
                [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
      Colours next(n_);
      std::uint32_t colour = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++colour;
        next[idx[i]] = colour;
      }
      const std::size_t next_cells = n_ == 0 ? 0 : colour + 1;
      c.swap(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return c;
  }

  std::string leaf_code(const Colours& pos) const {
    std::vector<std::uint32_t> inv(n_);
    for (std::uint32_t v = 0; v < n_; ++v) inv[pos[v]] = v;
    std::string out;
    out.push_back('X');
    put_u32(out, static_cast<std::uint32_t>(n_));
    for (std::uint32_t i = 0; i < n_; ++i) put_u64(out, g_.vertex_labels[inv[i]]);
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, std::uint64_t>> rec;
    rec.reserve(g_.edges.size());
    for (const auto& e : g_.edges) {
      auto a = std::make_tuple(pos[e.u], e.label_uv);
      auto b = std::make_tuple(pos[e.v], e.label_vu);
      if (b < a) std::swap(a, b);
      rec.emplace_back(std::get<0>(a), std::get<0>(b), std::get<1>(a), std::get<1>(b));
    }
    std::sort(rec.begin(), rec.end());
    put_u32(out, static_cast<std::uint32_t>(rec.size()));
    for (const auto& [a, b, la, lb] : rec) {
      put_u32(out, a);
      put_u32(out, b);
      put_u64(out, la);
      put_u64(out, lb);
    }
    return out;
  }

  // Returns std::nullopt when the node budget is exhausted.
  std::optional<std::string> run() {
    Colours start(n_);
    for (std::uint32_t v = 0; v < n_; ++v) start[v] = 0;
    // Initial colours are the ranks of the vertex labels.
    std::vector<std::uint64_t> labels = g_.vertex_labels;
    std::vector<std::uint64_t> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t v = 0; v < n_; ++v) {
      start[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), labels[v]) - sorted.begin());
    }
    Colours c = refine(start);
    std::vector<std::uint32_t> path;
    dfs(c, path);
    if (aborted_) return std::nullopt;
    return best_code_;
  }

  Colours stable_colouring() const {
    Colours start(n_);
    std::vector<std::uint64_t> sorted = g_.vertex_labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t v = 0; v < n_; ++v) {
      start[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), g_.vertex_labels[v]) - sorted.begin());
    }
    return refine(start);
  }

 private:
  static Colours rank(const Colours& c) {
    std::vector<std::uint32_t> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colours out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
      out[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), c[v]) - sorted.begin());
    }
    return out;
  }

  static std::size_t count_cells(const Colours& c) {
    if (c.empty()) return 0;
    return *std::max_element(c.begin(), c.end()) + 1;
  }

  // Depth of the node at which the search should continue.
  std::size_t dfs(const Colours& c, std::vector<std::uint32_t>& path) {
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return 0;
    }
    const std::size_t depth = path.size();

    // First non-singleton cell (smallest colour).
    std::vector<std::uint32_t> cell_size(n_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) ++cell_size[c[v]];
    std::uint32_t target = static_cast<std::uint32_t>(n_);
    for (std::uint32_t col = 0; col < n_; ++col) {
      if (cell_size[col] > 1) {
        target = col;
        break;
      }
    }
    if (target == n_) return leaf(c, path);

    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (c[v] == target) cell.push_back(v);
    }
    std::vector<std::uint32_t> explored;
    for (std::uint32_t v : cell) {
      if (!explored.empty() && in_explored_orbit(v, explored, path)) continue;
      Colours child(n_);
      for (std::uint32_t w = 0; w < n_; ++w) child[w] = 2 * c[w] + 1;
      child[v] = 2 * c[v];
      path.push_back(v);
      const std::size_t resume = dfs(refine(child), path);
      path.pop_back();
      if (aborted_) return 0;
      explored.push_back(v);
      if (resume < depth) return resume;
    }
    return depth == 0 ? 0 : depth - 1;
  }

  std::size_t leaf(const Colours& pos, const std::vector<std::uint32_t>& path) {
    std::string code = leaf_code(pos);
    const std::size_t depth = path.size();
    const std::size_t parent = depth == 0 ? 0 : depth - 1;
    if (!have_first_) {
      have_first_ = true;
      first_code_ = code;
      first_pos_ = pos;
      first_path_ = path;
      best_code_ = std::move(code);
      best_pos_ = pos;
      best_path_ = path;
      return parent;
    }
    if (code == first_code_) {
      record_automorphism(pos, first_pos_);
      return common_prefix(path, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(pos, best_pos_);
      return common_prefix(path, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_pos_ = pos;
      best_path_ = path;
    }
    return parent;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  // gamma maps the vertex at position p in `from` to the vertex at the same
  // position in `to`.
  void record_automorphism(const Colours& from, const Colours& to) {
    if (automorphisms_.size() >= kMaxGenerators) return;
    std::vector<std::uint32_t> to_inv(n_);
    for (std::uint32_t v = 0; v < n_; ++v) to_inv[to[v]] = v;
    std::vector<std::uint32_t> gamma(n_);
    for (std::uint32_t v = 0; v < n_; ++v) gamma[v] = to_inv[from[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  bool in_explored_orbit(std::uint32_t v, const std::vector<std::uint32_t>& explored,
                         const std::vector<std::uint32_t>& path) const {
    if (automorphisms_.empty()) return false;
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (std::uint32_t p : path) {
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (std::uint32_t x = 0; x < n_; ++x) {
        const std::uint32_t a = find(x), b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const std::uint32_t root = find(v);
    for (std::uint32_t u : explored) {
      if (find(u) == root) return true;
    }
    return false;
  }

  static constexpr std::size_t kMaxGenerators = 512;

  const LabelledGraph& g_;
  const CanonicalOptions& options_;
  std::size_t n_;
  std::vector<std::vector<Arc>> adj_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  bool have_first_ = false;
  std::string first_code_, best_code_;
  Colours first_pos_, best_pos_;
  std::vector<std::uint32_t> first_path_, best_path_;
  std::vector<std::vector<std::uint32_t>> automorphisms_;
};

std::string refinement_hash(const LabelledGraph& g, const CanonicalOptions& options) {
  Search s(g, options);
  const Colours c = s.stable_colouring();
  std::vector<std::tuple<std::uint32_t, std::uint64_t>> verts;
  for (std::size_t v = 0; v < c.size(); ++v) verts.emplace_back(c[v], g.vertex_labels[v]);
  std::sort(verts.begin(), verts.end());
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, std::uint64_t>> rec;
  for (const auto& e : g.edges) {
    auto a = std::make_tuple(c[e.u], e.label_uv);
    auto b = std::make_tuple(c[e.v], e.label_vu);
    if (b < a) std::swap(a, b);
    rec.emplace_back(std::get<0>(a), std::get<0>(b), std::get<1>(a), std::get<1>(b));
  }
  std::sort(rec.begin(), rec.end());
  std::uint64_t h1 = 0x243f6a8885a308d3ULL, h2 = 0x13198a2e03707344ULL;
  auto feed = [&](std::uint64_t x) {
    h1 = mix64(h1 ^ x);
    h2 = mix64(h2 + x * 0x9e3779b97f4a7c15ULL);
  };
  feed(c.size());
  for (const auto& [col, lab] : verts) {
    feed(col);
    feed(lab);
  }
  feed(rec.size());
  for (const auto& [a, b, la, lb] : rec) {
    feed(a);
    feed(b);
    feed(la);
    feed(lb);
  }
  std::string out;
  out.push_back('H');
  put_u64(out, h1);
  put_u64(out, h2);
  return out;
}

}  // namespace

std::string canonical_code(const LabelledGraph& g, const CanonicalOptions& options,
                           bool* exact) {
  if (g.vertex_labels.size() <= options.exact_limit) {
    Search s(g, options);
    if (auto code = s.run()) {
      if (exact) *exact = true;
      return *code;
    }
  }
  if (exact) *exact = false;
  return refinement_hash(g, options);
}

}  // namespace detail

namespace {

// Distinct half-edge labels are ranked; the rank table itself goes into the
// code so that ranks from different balls stay comparable.
struct LabelTable {
  using Key = std::tuple<std::uint8_t, std::int64_t, std::int64_t>;
  std::map<Key, std::uint64_t> ranks;
};

std::int64_t quantize(double x, double grid) {
  return static_cast<std::int64_t>(std::llround(x / grid));
}

std::string label_header(const std::vector<LabelTable::Key>& keys) {
  std::string out;
  const auto n = static_cast<std::uint32_t>(keys.size());
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((n >> s) & 0xff));
  for (const auto& [flag, re, im] : keys) {
    out.push_back(static_cast<char>(flag));
    for (std::int64_t x : {re, im}) {
      const auto u = static_cast<std::uint64_t>(x);
      for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<char>((u >> s) & 0xff));
    }
  }
  return out;
}

// Half-edge label keys: flag bit 0 = has mark, bit 1 = distinguished half-edge.
RootedBallClass classify(const MarkedGraph& g,
                         std::vector<std::uint64_t> vertex_labels,
                         std::optional<HalfEdgeId> root_half_edge,
                         const CanonicalOptions& options) {
  std::vector<LabelTable::Key> keys(g.half_edge_count());
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    std::uint8_t flag = g.has_marks() ? 1 : 0;
    if (root_half_edge && *root_half_edge == e) flag |= 2;
    std::int64_t re = 0, im = 0;
    if (g.has_marks()) {
      re = quantize(g.mark(e).real(), options.mark_grid);
      im = quantize(g.mark(e).imag(), options.mark_grid);
    }
    keys[e] = {flag, re, im};
  }
  std::vector<LabelTable::Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto rank_of = [&](const LabelTable::Key& k) {
    return static_cast<std::uint64_t>(
        std::lower_bound(distinct.begin(), distinct.end(), k) - distinct.begin());
  };

  detail::LabelledGraph lg;
  lg.vertex_labels = std::move(vertex_labels);
  lg.edges.reserve(g.edge_count());
  for (HalfEdgeId e = 0; e < g.half_edge_count(); e += 2) {
    lg.edges.push_back({g.source(e), g.target(e), rank_of(keys[e]), rank_of(keys[e + 1])});
  }
  RootedBallClass cls;
  cls.size = g.vertex_count();
  bool exact = true;
  cls.code = label_header(distinct) + detail::canonical_code(lg, options, &exact);
  cls.exact = exact;
  return cls;
}

}  // namespace

std::string RootedBallClass::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * code.size());
  for (unsigned char ch : code) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

RootedBallClass RootedBallClass::from_hex(const std::string& hex, std::size_t size) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex code");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  RootedBallClass cls;
  cls.size = size;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    cls.code.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  // Exact codes carry an 'X' tag after the label table; recover it.
  if (cls.code.size() >= 4) {
    const std::size_t labels = (static_cast<unsigned char>(cls.code[0]) << 24) |
                               (static_cast<unsigned char>(cls.code[1]) << 16) |
                               (static_cast<unsigned char>(cls.code[2]) << 8) |
                               static_cast<unsigned char>(cls.code[3]);
    const std::size_t tag = 4 + 17 * labels;
    cls.exact = tag < cls.code.size() && cls.code[tag] == 'X';
  }
  return cls;
}

RootedBallClass canonical_class(const RootedBall& b, const CanonicalOptions& options) {
  std::vector<std::uint64_t> labels(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) {
    labels[v] = 2 * std::uint64_t{b.distance[v]} + (b.boundary[v] ? 1 : 0);
  }
  return classify(b.graph, std::move(labels), std::nullopt, options);
}

RootedBallClass canonical_class(const EdgeRootedBall& b, const CanonicalOptions& options) {
  std::vector<std::uint64_t> labels(b.graph.vertex_count(), 0);
  labels[b.graph.source(b.root)] |= 1;
  labels[b.graph.target(b.root)] |= 2;
  return classify(b.graph, std::move(labels), b.root, options);
}

RootedBallClass canonical_class(const MarkedGraph& g, VertexId tail, VertexId head,
                                const CanonicalOptions& options) {
  if (tail >= g.vertex_count() || head >= g.vertex_count()) {
    throw std::out_of_range("root out of range");
  }
  std::vector<std::uint64_t> labels(g.vertex_count(), 0);
  labels[tail] |= 1;
  labels[head] |= 2;
  return classify(g, std::move(labels), std::nullopt, options);
}

std::string unrooted_graph_code(const MarkedGraph& g, const CanonicalOptions& options) {
  std::vector<std::string> parts;
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  std::vector<std::optional<std::string>> best(count);
  const auto r = static_cast<std::uint32_t>(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::string code = canonical_class(ball(g, v, r), options).code;
    auto& slot = best[comp[v]];
    if (!slot || code < *slot) slot = std::move(code);
  }
  for (auto& s : best) parts.push_back(*s);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    const auto len = static_cast<std::uint32_t>(p.size());
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((len >> s) & 0xff));
    out += p;
  }
  return out;
}

}  // namespace glim
