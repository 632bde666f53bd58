#pragma once

#include <cstdint>

#include "erlab/graph.hpp"

namespace erlab {

/// Clique count via the one-part shortcut: S induces a triangle-free graph
/// and is completely joined to the rest. Equals count_cliques(g, r); throws
/// structural_error naming the violated clause otherwise.
std::uint64_t count_cliques_one_part(const Graph& g, std::uint64_t s_mask,
                                     int r);

/// Clique count via the two-part shortcut: g is a complete multipartite
/// graph plus a triangle-free addition, v1 and v2 are two of its parts.
std::uint64_t count_cliques_two_parts(const Graph& g, std::uint64_t v1_mask,
                                      std::uint64_t v2_mask, int r);

/// Clique count via the three-part shortcut: g[S] is 3-partite and S is
/// completely joined to the rest.
std::uint64_t count_cliques_three_parts(const Graph& g, std::uint64_t s_mask,
                                        int r);

/// True when the subgraph induced by `mask` is bipartite (2-colorable).
bool is_bipartite_in(const Graph& g, std::uint64_t mask);

/// True when the subgraph induced by `mask` admits a proper k-coloring.
/// Exact backtracking; intended for the small vertex sets seen here.
bool is_k_colorable_in(const Graph& g, std::uint64_t mask, int k);

}  // namespace erlab
