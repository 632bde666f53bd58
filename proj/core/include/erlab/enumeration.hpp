#pragma once

#include <functional>

#include "erlab/canonical.hpp"
#include "erlab/graph.hpp"

namespace erlab {

/// Isomorph-free exhaustive generation of n-vertex graphs by canonical edge
/// augmentation: children extend a graph by one non-edge per automorphism
/// orbit and survive only when the added edge lies in the orbit of the
/// canonical deletion edge of the child. Every isomorphism class whose edge
/// count is <= max_edges (and all of whose subgraphs pass `keep_edge`) is
/// visited exactly once.
///
/// `keep_edge(g, u, v)` decides whether g + uv stays inside the generated
/// class; it must be isomorphism-invariant and the class must be closed
/// under edge deletion (true for "all graphs" and "triangle-free graphs").
/// `visit(g, e, canon)` is called once per class with the graph's canonical
/// data; returning false prunes the subtree below g.
void enumerate_isofree(
    int n, int max_edges,
    const std::function<bool(const Graph&, int, int)>& keep_edge,
    const std::function<bool(const Graph&, int, const CanonicalResult&)>&
        visit);

/// keep_edge predicate for triangle-free generation.
bool addable_triangle_free(const Graph& g, int u, int v);

}  // namespace erlab
