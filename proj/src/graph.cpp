// Copyright 2026 The cbcchaos Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbcchaos/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "cbcchaos/error.hpp"
#include "cbcchaos/reach.hpp"

namespace cbcchaos {

TransitionGraph::TransitionGraph(KeyedPermutation cipher, MessageSemantics semantics)
    : cipher_(std::move(cipher)),
      semantics_(semantics),
      labels_(cbcchaos::label_count(semantics, cipher_.size())) {}

std::vector<LabeledVertex> successors(const TransitionGraph& g, const Block& x) {
  if (x.size() != g.size()) throw Error("block width does not match graph");
  std::vector<LabeledVertex> out;
  out.reserve(g.label_count());
  for (std::uint32_t m = 0; m < g.label_count(); ++m) {
    out.push_back({m, g.successor(x.value(), m)});
  }
  return out;
}

std::vector<LabeledVertex> predecessors(const TransitionGraph& g, const Block& y) {
  if (y.size() != g.size()) throw Error("block width does not match graph");
  std::vector<LabeledVertex> out;
  out.reserve(g.label_count());
  for (std::uint32_t m = 0; m < g.label_count(); ++m) {
    out.push_back({m, g.predecessor(y.value(), m)});
  }
  return out;
}

std::string_view to_string(ConnectivityMode mode) {
  return mode == ConnectivityMode::kExplicit ? "explicit" : "implicit";
}

ConnectivityMode parse_connectivity_mode(std::string_view text) {
  if (text == "explicit") return ConnectivityMode::kExplicit;
  if (text == "implicit") return ConnectivityMode::kImplicit;
  throw Error("unknown connectivity mode '" + std::string(text) +
              "' (expected explicit or implicit)");
}

namespace {

// All edges stored row-major: targets[x * labels + m].
struct ExplicitGraph {
  std::uint32_t vertices;
  std::uint32_t labels;
  std::vector<std::uint32_t> targets;
  // Reverse adjacency in CSR form, built by counting sort over `targets`.
  std::vector<std::uint32_t> rev_offsets;
  std::vector<std::uint32_t> rev_sources;
};

ExplicitGraph materialise(const TransitionGraph& g) {
  ExplicitGraph e;
  e.vertices = static_cast<std::uint32_t>(g.vertex_count());
  e.labels = static_cast<std::uint32_t>(g.label_count());
  const std::size_t edges = std::size_t{e.vertices} * e.labels;
  e.targets.resize(edges);
  for (std::uint32_t x = 0; x < e.vertices; ++x) {
    for (std::uint32_t m = 0; m < e.labels; ++m) {
      e.targets[std::size_t{x} * e.labels + m] = g.successor(x, m);
    }
  }
  e.rev_offsets.assign(e.vertices + 1, 0);
  for (std::uint32_t t : e.targets) ++e.rev_offsets[t + 1];
  for (std::uint32_t v = 0; v < e.vertices; ++v) e.rev_offsets[v + 1] += e.rev_offsets[v];
  e.rev_sources.resize(edges);
  std::vector<std::uint32_t> fill(e.rev_offsets.begin(), e.rev_offsets.end() - 1);
  for (std::size_t i = 0; i < edges; ++i) {
    e.rev_sources[fill[e.targets[i]]++] = static_cast<std::uint32_t>(i / e.labels);
  }
  return e;
}

// Iterative Tarjan; returns the number of strongly connected components.
std::uint64_t tarjan_scc_count(const ExplicitGraph& e) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(e.vertices, kUnvisited);
  std::vector<std::uint32_t> low(e.vertices, 0);
  std::vector<bool> on_stack(e.vertices, false);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t v;
    std::uint32_t next_label;
  };
  std::vector<Frame> calls;
  std::uint32_t counter = 0;
  std::uint64_t components = 0;

  auto open = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    calls.push_back({v, 0});
  };

  for (std::uint32_t s = 0; s < e.vertices; ++s) {
    if (index[s] != kUnvisited) continue;
    open(s);
    while (!calls.empty()) {
      Frame& f = calls.back();
      if (f.next_label < e.labels) {
        const std::uint32_t w = e.targets[std::size_t{f.v} * e.labels + f.next_label];
        ++f.next_label;
        if (index[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != v);
        ++components;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const std::uint32_t parent = calls.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

VertexSet explicit_reach(const ExplicitGraph& e, std::uint32_t root,
                         Direction direction) {
  VertexSet visited(e.vertices);
  visited.set(root);
  std::deque<std::uint32_t> queue{root};
  auto visit = [&](std::uint32_t t) {
    if (!visited.test(t)) {
      visited.set(t);
      queue.push_back(t);
    }
  };
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    if (direction == Direction::kForward) {
      for (std::uint32_t m = 0; m < e.labels; ++m) {
        visit(e.targets[std::size_t{v} * e.labels + m]);
      }
    } else {
      for (std::uint32_t i = e.rev_offsets[v]; i < e.rev_offsets[v + 1]; ++i) {
        visit(e.rev_sources[i]);
      }
    }
  }
  return visited;
}

// If 0 misses some vertex, (0, smallest missed) is the smallest pair.
// Otherwise a vertex reaches everything iff it reaches 0, so the smallest
// vertex outside the backward set of 0 paired with 0 is the smallest pair.
template <typename Reach>
ConnectivityVerdict verdict_from_sweeps(Reach&& reach) {
  ConnectivityVerdict verdict;
  const VertexSet forward = reach(0, Direction::kForward);
  if (auto missing = forward.first_missing()) {
    verdict.witness = UnreachablePair{0, static_cast<std::uint32_t>(*missing),
                                      forward.count()};
    return verdict;
  }
  const VertexSet backward = reach(0, Direction::kBackward);
  if (auto missing = backward.first_missing()) {
    const auto from = static_cast<std::uint32_t>(*missing);
    verdict.witness =
        UnreachablePair{from, 0, reach(from, Direction::kForward).count()};
    return verdict;
  }
  verdict.strongly_connected = true;
  return verdict;
}

}  // namespace

ConnectivityVerdict strongly_connected(const TransitionGraph& g,
                                       ConnectivityMode mode) {
  if (mode == ConnectivityMode::kExplicit) {
    if (g.size().bits() > kExplicitMaxBits) {
      throw ResourceLimitError(
          "explicit connectivity materialises every edge and is limited to n <= " +
          std::to_string(kExplicitMaxBits) + "; use implicit mode for n = " +
          std::to_string(g.size().bits()));
    }
    const ExplicitGraph e = materialise(g);
    ConnectivityVerdict verdict = verdict_from_sweeps(
        [&](std::uint32_t root, Direction d) { return explicit_reach(e, root, d); });
    verdict.scc_count = tarjan_scc_count(e);
    if ((*verdict.scc_count == 1) != verdict.strongly_connected) {
      throw std::logic_error("Tarjan component count disagrees with reachability");
    }
    return verdict;
  }
  return verdict_from_sweeps([&](std::uint32_t root, Direction d) {
    return reach_parallel(g, root, d);
  });
}

std::optional<std::vector<std::uint32_t>> find_path(const TransitionGraph& g,
                                                    std::uint32_t from,
                                                    std::uint32_t to) {
  const std::uint64_t total = g.vertex_count();
  if (from >= total || to >= total) throw Error("vertex out of range");
  if (from == to) return std::vector<std::uint32_t>{};

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(total, kNone);
  std::vector<std::uint32_t> via(total, 0);
  parent[from] = from;
  std::deque<std::uint32_t> queue{from};
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t m = 0; m < g.label_count(); ++m) {
      const std::uint32_t t = g.successor(v, m);
      if (parent[t] != kNone) continue;
      parent[t] = v;
      via[t] = m;
      if (t == to) {
        std::vector<std::uint32_t> labels;
        for (std::uint32_t cur = to; cur != from; cur = parent[cur]) {
          labels.push_back(via[cur]);
        }
        std::reverse(labels.begin(), labels.end());
        return labels;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

namespace {

void require_renderable(const TransitionGraph& g, std::string_view what) {
  if (g.size().bits() > kRenderMaxBits) {
    throw ResourceLimitError(std::string(what) + " is limited to n <= " +
                             std::to_string(kRenderMaxBits));
  }
}

}  // namespace

std::vector<EdgeRow> edge_table(const TransitionGraph& g) {
  require_renderable(g, "edge table");
  std::vector<EdgeRow> rows;
  rows.reserve(g.vertex_count() * g.label_count());
  for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
    for (std::uint32_t m = 0; m < g.label_count(); ++m) {
      const std::uint32_t f = mix(x, m, g.semantics(), g.size());
      rows.push_back({x, m, f, g.cipher().encrypt(f)});
    }
  }
  return rows;
}

std::string edge_table_csv(const TransitionGraph& g) {
  const unsigned n = g.size().bits();
  std::ostringstream out;
  out << "x,x_bin,m,F,F_bin,g,g_bin\n";
  for (const EdgeRow& r : edge_table(g)) {
    out << r.x << ',' << to_binary(r.x, n) << ',' << r.label << ',' << r.mixed
        << ',' << to_binary(r.mixed, n) << ',' << r.target << ','
        << to_binary(r.target, n) << '\n';
  }
  return out.str();
}

std::string export_dot(const TransitionGraph& g) {
  require_renderable(g, "DOT export");
  const unsigned n = g.size().bits();
  std::ostringstream out;
  out << "digraph transition_graph {\n";
  out << "  label=\"" << g.cipher().descriptor() << ", n=" << n << ", "
      << to_string(g.semantics()) << "\";\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
    out << "  " << x << " [label=\"" << x << "\", tooltip=\"" << to_binary(x, n)
        << "\"];\n";
  }
  for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
    for (std::uint32_t m = 0; m < g.label_count(); ++m) {
      out << "  " << x << " -> " << g.successor(x, m) << " [label=\"" << m
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cbcchaos
