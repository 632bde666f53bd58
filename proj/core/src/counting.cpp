#include "erlab/counting.hpp"

#include <algorithm>
#include <array>

#include "erlab/checked.hpp"

namespace erlab {

namespace {

void require(bool ok, const char* clause) {
  if (!ok) throw structural_error(std::string("precondition failed: ") + clause);
}

bool join_complete(const Graph& g, std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t rest = a; rest; rest &= rest - 1) {
    const int v = Graph::countr_zero(rest);
    if ((g.neighbors(v) & b) != b) return false;
  }
  return true;
}

std::uint64_t edges_within(const Graph& g, std::uint64_t mask) {
  std::uint64_t twice = 0;
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const int v = Graph::countr_zero(rest);
    twice += Graph::popcount(g.neighbors(v) & mask);
  }
  return twice / 2;
}

}  // namespace

bool is_bipartite_in(const Graph& g, std::uint64_t mask) {
  mask &= g.vertex_mask();
  std::array<int, Graph::kMaxVertices> color{};
  color.fill(-1);
  for (std::uint64_t seed = mask; seed; seed &= seed - 1) {
    const int s = Graph::countr_zero(seed);
    if (color[s] != -1) continue;
    color[s] = 0;
    std::array<int, Graph::kMaxVertices> stack;
    int top = 0;
    stack[top++] = s;
    while (top) {
      const int u = stack[--top];
      std::uint64_t nbrs = g.neighbors(u) & mask;
      while (nbrs) {
        const int v = Graph::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack[top++] = v;
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_k_colorable_in(const Graph& g, std::uint64_t mask, int k) {
  mask &= g.vertex_mask();
  if (k < 0) throw argument_error("color count must be >= 0");
  if (mask == 0) return true;
  if (k == 0) return false;
  if (k == 1) return edges_within(g, mask) == 0;
  if (k == 2) return is_bipartite_in(g, mask);

  std::array<int, Graph::kMaxVertices> verts;
  int m = 0;
  for (std::uint64_t rest = mask; rest; rest &= rest - 1)
    verts[m++] = Graph::countr_zero(rest);
  std::array<int, Graph::kMaxVertices> color{};
  color.fill(-1);

  auto assign = [&](auto&& self, int idx) -> bool {
    if (idx == m) return true;
    const int v = verts[idx];
    // First vertex may take color 0 only; later ones at most one fresh color.
    int max_color = 0;
    for (int i = 0; i < idx; ++i) max_color = std::max(max_color, color[verts[i]] + 1);
    const int limit = std::min(k - 1, max_color);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      std::uint64_t nbrs = g.neighbors(v) & mask;
      while (nbrs && ok) {
        const int u = Graph::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (color[u] == c) ok = false;
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return assign(assign, 0);
}

std::uint64_t count_cliques_one_part(const Graph& g, std::uint64_t s_mask,
                                     int r) {
  s_mask &= g.vertex_mask();
  const std::uint64_t rest = g.vertex_mask() & ~s_mask;
  require(count_cliques_in(g, s_mask, 3) == 0, "G[S] is triangle-free");
  require(join_complete(g, s_mask, rest), "G[S, S-complement] is complete");

  const std::uint64_t s_edges = edges_within(g, s_mask);
  const std::uint64_t s_size = Graph::popcount(s_mask);
  std::uint64_t total = checked_mul(s_edges, count_cliques_in(g, rest, r - 2));
  total = checked_add(total,
                      checked_mul(s_size, count_cliques_in(g, rest, r - 1)));
  return checked_add(total, count_cliques_in(g, rest, r));
}

std::uint64_t count_cliques_two_parts(const Graph& g, std::uint64_t v1_mask,
                                      std::uint64_t v2_mask, int r) {
  v1_mask &= g.vertex_mask();
  v2_mask &= g.vertex_mask();
  require((v1_mask & v2_mask) == 0, "V1 and V2 are disjoint");
  const std::uint64_t s_mask = v1_mask | v2_mask;
  const std::uint64_t rest = g.vertex_mask() & ~s_mask;
  require(count_cliques_in(g, v1_mask, 3) == 0, "G[V1] is triangle-free");
  require(count_cliques_in(g, v2_mask, 3) == 0, "G[V2] is triangle-free");
  require(join_complete(g, v1_mask, v2_mask), "G[V1, V2] is complete");
  require(join_complete(g, s_mask, rest), "G[S, S-complement] is complete");

  const std::uint64_t e1 = edges_within(g, v1_mask);
  const std::uint64_t e2 = edges_within(g, v2_mask);
  const std::uint64_t n1 = Graph::popcount(v1_mask);
  const std::uint64_t n2 = Graph::popcount(v2_mask);
  const std::uint64_t s_edges = edges_within(g, s_mask);
  const std::uint64_t s_size = n1 + n2;

  std::uint64_t total =
      checked_mul(checked_mul(e1, e2), count_cliques_in(g, rest, r - 4));
  total = checked_add(
      total, checked_mul(checked_add(checked_mul(e1, n2), checked_mul(e2, n1)),
                         count_cliques_in(g, rest, r - 3)));
  total = checked_add(total,
                      checked_mul(s_edges, count_cliques_in(g, rest, r - 2)));
  total = checked_add(total,
                      checked_mul(s_size, count_cliques_in(g, rest, r - 1)));
  return checked_add(total, count_cliques_in(g, rest, r));
}

std::uint64_t count_cliques_three_parts(const Graph& g, std::uint64_t s_mask,
                                        int r) {
  s_mask &= g.vertex_mask();
  const std::uint64_t rest = g.vertex_mask() & ~s_mask;
  require(is_k_colorable_in(g, s_mask, 3), "G[S] is 3-partite");
  require(join_complete(g, s_mask, rest), "G[S, S-complement] is complete");

  const std::uint64_t s_triangles = count_cliques_in(g, s_mask, 3);
  const std::uint64_t s_edges = edges_within(g, s_mask);
  const std::uint64_t s_size = Graph::popcount(s_mask);

  std::uint64_t total =
      checked_mul(s_triangles, count_cliques_in(g, rest, r - 3));
  total = checked_add(total,
                      checked_mul(s_edges, count_cliques_in(g, rest, r - 2)));
  total = checked_add(total,
                      checked_mul(s_size, count_cliques_in(g, rest, r - 1)));
  return checked_add(total, count_cliques_in(g, rest, r));
}

}  // namespace erlab
