#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "erlab/errors.hpp"

namespace erlab {

/// Undirected simple graph on up to 64 vertices. Adjacency is a symmetric
/// bit matrix with zero diagonal; one row fits a machine word so neighborhood
/// intersection is a single AND. Value type: copy freely, share across
/// threads once constructed.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n) : n_(n), rows_{} {
    if (n < 1 || n > kMaxVertices)
      throw argument_error("vertex count must be in [1, 64], got " +
                           std::to_string(n));
  }

  static Graph complete(int n) {
    Graph g(n);
    const std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < n; ++v) g.rows_[v] = all & ~bit(v);
    return g;
  }

  static Graph cycle(int n) {
    Graph g(n);
    if (n == 2) {
      g.add_edge(0, 1);
      return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  int vertex_count() const noexcept { return n_; }

  std::uint64_t vertex_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw argument_error("self-loops are not representable");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  /// Neighborhood of v as a bitmask.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  std::uint64_t edge_count() const noexcept {
    std::uint64_t total = 0;
    for (int v = 0; v < n_; ++v) total += popcount(rows_[v]);
    return total / 2;
  }

  int degree(int v) const { return popcount(neighbors(v)); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u) {
      std::uint64_t higher = rows_[u] >> (u + 1);
      while (higher) {
        int v = u + 1 + countr_zero(higher);
        out.emplace_back(u, v);
        higher &= higher - 1;
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const noexcept {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (rows_[v] != other.rows_[v]) return false;
    return true;
  }

  static std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }
  static int popcount(std::uint64_t x) noexcept {
    return __builtin_popcountll(x);
  }
  static int countr_zero(std::uint64_t x) noexcept {
    return __builtin_ctzll(x);
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw argument_error("vertex " + std::to_string(v) +
                           " out of range for n=" + std::to_string(n_));
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_;
};

/// Number of r-vertex complete subgraphs of g, exact. Follows the counting
/// conventions N(K_0)=1 and N(K_j)=0 for j<0; r=1 gives the vertex count.
/// Throws arithmetic_overflow_error rather than wrapping (unreachable for
/// n <= 64, where the count is bounded by C(64,32) < 2^64, but checked).
std::uint64_t count_cliques(const Graph& g, int r);

/// Same count restricted to cliques inside `mask` (a vertex subset of g).
std::uint64_t count_cliques_in(const Graph& g, std::uint64_t mask, int r);

Graph complement(const Graph& g);

/// Subgraph induced by the vertices in `mask`, re-indexed compactly in
/// ascending original order. The mask must select at least one vertex.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

bool is_triangle_free(const Graph& g);

/// A graph plus a vertex partition witnessing multipartite structure.
/// Part labels are 1-based and every part in 1..part_count() is non-empty.
class PartitionedGraph {
 public:
  PartitionedGraph(Graph graph, std::vector<int> part_of);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& part_of() const noexcept { return part_of_; }
  int part_count() const noexcept { return parts_; }

  /// Vertices of part i (1-based) as a bitmask.
  std::uint64_t part_mask(int i) const;

  /// Part sizes indexed 0..parts-1 for parts 1..parts.
  std::vector<int> part_sizes() const;

  /// True when every cross-part pair of vertices is adjacent.
  bool cross_parts_complete() const;

  /// True when every part induces a triangle-free graph (the H0 shape,
  /// together with cross_parts_complete()).
  bool parts_triangle_free() const;

 private:
  Graph graph_;
  std::vector<int> part_of_;
  int parts_;
};

/// Complete multipartite graph with the given part sizes, vertices laid out
/// as consecutive blocks in the given order. All sizes must be >= 1.
PartitionedGraph complete_multipartite(const std::vector<int>& sizes);

}  // namespace erlab
