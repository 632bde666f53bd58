#include "erlab/graph.hpp"

#include <algorithm>

#include "erlab/checked.hpp"

namespace erlab {

namespace {

// Extends a clique one vertex at a time through the candidate mask; taking
// candidates in ascending order counts each clique exactly once.
std::uint64_t extend(const Graph& g, std::uint64_t candidates, int remaining) {
  if (remaining == 1) return Graph::popcount(candidates);
  std::uint64_t total = 0;
  while (candidates) {
    const int v = Graph::countr_zero(candidates);
    candidates &= candidates - 1;
    const std::uint64_t next = candidates & g.neighbors(v);
    if (Graph::popcount(next) < remaining - 1) continue;
    total = checked_add(total, extend(g, next, remaining - 1));
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques_in(const Graph& g, std::uint64_t mask, int r) {
  mask &= g.vertex_mask();
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (Graph::popcount(mask) < r) return 0;
  return extend(g, mask, r);
}

std::uint64_t count_cliques(const Graph& g, int r) {
  return count_cliques_in(g, g.vertex_mask(), r);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = ~g.neighbors(u) & g.vertex_mask() & ~Graph::bit(u);
    while (row) {
      const int v = Graph::countr_zero(row);
      row &= row - 1;
      if (v > u) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
  mask &= g.vertex_mask();
  const int m = Graph::popcount(mask);
  if (m == 0) throw argument_error("induced subgraph needs a non-empty mask");
  std::array<int, Graph::kMaxVertices> index{};
  int next = 0;
  for (std::uint64_t rest = mask; rest; rest &= rest - 1)
    index[Graph::countr_zero(rest)] = next++;
  Graph out(m);
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const int u = Graph::countr_zero(rest);
    std::uint64_t row = g.neighbors(u) & mask;
    while (row) {
      const int v = Graph::countr_zero(row);
      row &= row - 1;
      if (v > u) out.add_edge(index[u], index[v]);
    }
  }
  return out;
}

bool is_triangle_free(const Graph& g) { return count_cliques(g, 3) == 0; }

PartitionedGraph::PartitionedGraph(Graph graph, std::vector<int> part_of)
    : graph_(std::move(graph)), part_of_(std::move(part_of)), parts_(0) {
  if (static_cast<int>(part_of_.size()) != graph_.vertex_count())
    throw argument_error("part label vector length must equal vertex count");
  for (int label : part_of_) {
    if (label < 1)
      throw argument_error("part labels are 1-based, got " +
                           std::to_string(label));
    parts_ = std::max(parts_, label);
  }
  std::vector<bool> seen(parts_ + 1, false);
  for (int label : part_of_) seen[label] = true;
  for (int i = 1; i <= parts_; ++i)
    if (!seen[i])
      throw structural_error("part " + std::to_string(i) + " is empty");
}

std::uint64_t PartitionedGraph::part_mask(int i) const {
  if (i < 1 || i > parts_)
    throw argument_error("part index " + std::to_string(i) + " out of range");
  std::uint64_t mask = 0;
  for (int v = 0; v < graph_.vertex_count(); ++v)
    if (part_of_[v] == i) mask |= Graph::bit(v);
  return mask;
}

std::vector<int> PartitionedGraph::part_sizes() const {
  std::vector<int> sizes(parts_, 0);
  for (int label : part_of_) ++sizes[label - 1];
  return sizes;
}

bool PartitionedGraph::cross_parts_complete() const {
  const int n = graph_.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of_[u] != part_of_[v] && !graph_.has_edge(u, v)) return false;
  return true;
}

bool PartitionedGraph::parts_triangle_free() const {
  for (int i = 1; i <= parts_; ++i)
    if (count_cliques_in(graph_, part_mask(i), 3) != 0) return false;
  return true;
}

PartitionedGraph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw argument_error("need at least one part");
  int n = 0;
  for (int s : sizes) {
    if (s < 1)
      throw argument_error("part sizes must be >= 1, got " +
                           std::to_string(s));
    n += s;
  }
  if (n > Graph::kMaxVertices)
    throw argument_error("total size " + std::to_string(n) + " exceeds 64");
  Graph g(n);
  std::vector<int> part_of(n);
  int offset = 0, label = 1;
  for (int s : sizes) {
    for (int v = offset; v < offset + s; ++v) part_of[v] = label;
    offset += s;
    ++label;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return {std::move(g), std::move(part_of)};
}

}  // namespace erlab
