#include "erlab/enumeration.hpp"

#include <utility>
#include <vector>

#include "erlab/canonical.hpp"

namespace erlab {

namespace {

struct Generator {
  int n;
  int max_edges;
  const std::function<bool(const Graph&, int, int)>& keep_edge;
  const std::function<bool(const Graph&, int, const CanonicalResult&)>& visit;

  // The canonical deletion edge of h: the edge occupying the largest
  // position pair under the canonical labeling. Well-defined as an
  // automorphism orbit, which is all the acceptance test needs.
  static std::pair<int, int> canonical_deletion(const Graph& h,
                                                const CanonicalResult& canon) {
    std::pair<int, int> best_edge{-1, -1};
    std::pair<int, int> best_key{-1, -1};
    for (const auto& [u, v] : h.edges()) {
      const int a = canon.labeling[u], b = canon.labeling[v];
      const std::pair<int, int> key{std::max(a, b), std::min(a, b)};
      if (key > best_key) {
        best_key = key;
        best_edge = {u, v};
      }
    }
    return best_edge;
  }

  void expand(Graph& g, int e_now, const CanonicalResult& canon_g) {
    if (!visit(g, e_now, canon_g)) return;
    if (e_now >= max_edges) return;

    const std::vector<int> orbits =
        pair_orbits(n, canon_g.automorphism_generators);
    std::vector<bool> orbit_done(orbits.size(), false);
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v)) continue;
        const int rep = orbits[pair_index(u, v, n)];
        if (orbit_done[rep]) continue;
        orbit_done[rep] = true;
        if (!keep_edge(g, u, v)) continue;

        g.add_edge(u, v);
        const CanonicalResult canon_h = canonicalize(g);
        const auto cdel = canonical_deletion(g, canon_h);
        const std::vector<int> orbits_h =
            pair_orbits(n, canon_h.automorphism_generators);
        if (orbits_h[pair_index(u, v, n)] ==
            orbits_h[pair_index(cdel.first, cdel.second, n)])
          expand(g, e_now + 1, canon_h);
        g.remove_edge(u, v);
      }
    }
  }
};

}  // namespace

void enumerate_isofree(
    int n, int max_edges,
    const std::function<bool(const Graph&, int, int)>& keep_edge,
    const std::function<bool(const Graph&, int, const CanonicalResult&)>&
        visit) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw argument_error("vertex count must be in [1, 64]");
  if (max_edges < 0) throw argument_error("max_edges must be >= 0");
  Graph g(n);
  Generator gen{n, max_edges, keep_edge, visit};
  gen.expand(g, 0, canonicalize(g));
}

bool addable_triangle_free(const Graph& g, int u, int v) {
  return (g.neighbors(u) & g.neighbors(v)) == 0;
}

}  // namespace erlab
