#include "erlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "erlab/canonical.hpp"
#include "erlab/counting.hpp"
#include "erlab/enumeration.hpp"
#include "erlab/graph6.hpp"

namespace erlab {

namespace {

std::uint64_t edges_within(const Graph& g, std::uint64_t mask) {
  std::uint64_t twice = 0;
  for (std::uint64_t rest = mask; rest; rest &= rest - 1)
    twice += Graph::popcount(g.neighbors(Graph::countr_zero(rest)) & mask);
  return twice / 2;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(Graph::countr_zero(mask));
  return out;
}

// Triangle-free walk on v vertices, harvesting canonical forms per level.
std::vector<std::vector<std::string>> walk_triangle_free(int v, int max_e) {
  std::vector<std::vector<std::string>> levels(max_e + 1);
  enumerate_isofree(
      v, max_e, addable_triangle_free,
      [&](const Graph&, int e, const CanonicalResult& canon) {
        levels[e].push_back(canon.form);
        return true;
      });
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

void check_block_cap(int v, const ConstructionLimits& limits) {
  if (v > limits.max_block)
    throw capacity_error("block on " + std::to_string(v) +
                         " vertices exceeds max_block=" +
                         std::to_string(limits.max_block));
}

struct ComponentView {
  std::vector<std::uint64_t> masks;
  std::vector<bool> dirty;  // induces at least one edge of g
  std::vector<int> size;
};

ComponentView component_view(const Graph& g) {
  ComponentView view;
  for (std::uint64_t mask : complement_components(g)) {
    view.masks.push_back(mask);
    view.size.push_back(Graph::popcount(mask));
    view.dirty.push_back(edges_within(g, mask) > 0);
  }
  return view;
}

// Shared backbone of the K(n,e)-style memberships: can the complement
// components be grouped into parts, all independent except at most one
// triangle-free part? With `exact_parts`, the grouping must use exactly
// that many parts.
bool partite_family_member(const Graph& g, std::optional<int> exact_parts) {
  const ComponentView view = component_view(g);
  int dirty_count = 0;
  std::uint64_t dirty_mask = 0;
  for (std::size_t c = 0; c < view.masks.size(); ++c) {
    if (view.dirty[c]) {
      ++dirty_count;
      dirty_mask = view.masks[c];
    }
  }
  if (dirty_count >= 2) return false;
  if (dirty_count == 1 && count_cliques_in(g, dirty_mask, 3) != 0) return false;
  if (!exact_parts) return true;
  const int total = static_cast<int>(view.masks.size());
  if (dirty_count == 1) return total == *exact_parts;
  // All components independent: the designated part is a single component
  // or the complete-bipartite union of two of them.
  return total == *exact_parts || (total >= 2 && total - 1 == *exact_parts);
}

bool basic_shape_ok(const Graph& g, int n, std::uint64_t e) {
  return g.vertex_count() == n && g.edge_count() == e;
}

// Matches g against "complete k-partite with the given part sizes, minus m
// cross edges each joining the last part to an equal-second-largest part,
// with every last-part vertex aiming at a single part".
bool removed_star_pattern_match(const Graph& g, const std::vector<int>& sizes,
                                std::uint64_t m) {
  const int k = static_cast<int>(sizes.size());
  if (k < 2 || m == 0) return false;
  const int n = g.vertex_count();
  const int size_last = sizes[k - 1];
  const int size_second = sizes[k - 2];

  std::vector<int> slots = sizes;
  std::sort(slots.begin(), slots.end(), std::greater<int>());
  std::vector<std::uint64_t> slot_mask(k, 0);
  std::vector<int> slot_fill(k, 0);

  auto pattern_ok = [&]() {
    // Missing cross pairs, grouped by the candidate last part.
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int su = -1, sv = -1;
        for (int s = 0; s < k; ++s) {
          if (slot_mask[s] & Graph::bit(u)) su = s;
          if (slot_mask[s] & Graph::bit(v)) sv = s;
        }
        if (su != sv && !g.has_edge(u, v)) missing.emplace_back(u, v);
      }
    if (missing.size() != m) return false;
    for (int kappa = 0; kappa < k; ++kappa) {
      if (slots[kappa] != size_last) continue;
      bool ok = true;
      std::map<int, int> target_of;  // last-part vertex -> partner slot
      for (const auto& [u, v] : missing) {
        const bool u_in = (slot_mask[kappa] >> u) & 1;
        const bool v_in = (slot_mask[kappa] >> v) & 1;
        if (u_in == v_in) {
          ok = false;
          break;
        }
        const int x = u_in ? u : v;
        const int y = u_in ? v : u;
        int sy = -1;
        for (int s = 0; s < k; ++s)
          if (slot_mask[s] & Graph::bit(y)) sy = s;
        if (sy == kappa || slots[sy] != size_second) {
          ok = false;
          break;
        }
        auto [it, inserted] = target_of.try_emplace(x, sy);
        if (!inserted && it->second != sy) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  // Partition V into independent sets of the prescribed sizes; equal-size
  // slots are opened in order so each set partition appears once.
  bool found = false;
  auto assign = [&](auto&& self, int v) -> bool {
    if (found) return true;
    if (v == n) {
      if (pattern_ok()) found = true;
      return found;
    }
    for (int s = 0; s < k; ++s) {
      if (slot_fill[s] == slots[s]) continue;
      if (slot_fill[s] == 0) {
        bool earlier_empty_same = false;
        for (int t = 0; t < s; ++t)
          if (slot_fill[t] == 0 && slots[t] == slots[s]) earlier_empty_same = true;
        if (earlier_empty_same) continue;
      }
      if (g.neighbors(v) & slot_mask[s]) continue;
      slot_mask[s] |= Graph::bit(v);
      ++slot_fill[s];
      if (self(self, v + 1)) return true;
      slot_mask[s] &= ~Graph::bit(v);
      --slot_fill[s];
    }
    return false;
  };
  assign(assign, 0);
  return found;
}

}  // namespace

PartitionedGraph assemble_with_block(const std::vector<int>& independent_sizes,
                                     const Graph& block) {
  std::vector<int> sizes = independent_sizes;
  sizes.push_back(block.vertex_count());
  PartitionedGraph shell = complete_multipartite(sizes);
  Graph g = shell.graph();
  const int offset = g.vertex_count() - block.vertex_count();
  for (const auto& [u, v] : block.edges()) g.add_edge(offset + u, offset + v);
  return {std::move(g), shell.part_of()};
}

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::HSTAR: return "HSTAR";
    case FamilyTag::H1STAR: return "H1STAR";
    case FamilyTag::H2STAR: return "H2STAR";
    case FamilyTag::H0: return "H0";
    case FamilyTag::K_FAMILY: return "K_FAMILY";
  }
  return "?";
}

std::vector<std::uint64_t> complement_components(const Graph& g) {
  const std::uint64_t all = g.vertex_mask();
  std::vector<std::uint64_t> comps;
  std::uint64_t unseen = all;
  while (unseen) {
    std::uint64_t frontier = Graph::bit(Graph::countr_zero(unseen));
    std::uint64_t comp = 0;
    while (frontier) {
      comp |= frontier;
      unseen &= ~frontier;
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest; rest &= rest - 1) {
        const int v = Graph::countr_zero(rest);
        next |= ~g.neighbors(v) & all & ~Graph::bit(v);
      }
      frontier = next & unseen;
    }
    comps.push_back(comp);
  }
  return comps;
}

FamilyMember build_h_star(int n, std::uint64_t e) {
  if (e < 1) throw argument_error("build_h_star requires e >= 1");
  const ExtremalProfile prof = profile(n, e, 3);
  PartitionedGraph pg = complete_multipartite(prof.a_star);
  Graph g = pg.graph();

  FamilyWitness witness;
  witness.part_sizes = prof.a_star;
  if (prof.m_star > 0) {
    const std::vector<int> centre_part =
        mask_vertices(pg.part_mask(prof.k));
    const std::vector<int> leaf_part =
        mask_vertices(pg.part_mask(prof.k - 1));
    const int centre = centre_part.front();
    for (std::uint64_t i = 0; i < prof.m_star; ++i) {
      g.remove_edge(centre, leaf_part[i]);
      witness.removed_edges.emplace_back(centre, leaf_part[i]);
    }
  }
  PartitionedGraph out(std::move(g), pg.part_of());
  if (out.graph().edge_count() != e)
    throw structural_error("H* edge count mismatch");
  return {std::move(out), FamilyTag::HSTAR, std::move(witness)};
}

std::vector<Graph> enumerate_triangle_free(int v, std::uint64_t e,
                                           const ConstructionLimits& limits) {
  if (v < 1) throw argument_error("vertex count must be >= 1");
  check_block_cap(v, limits);
  if (e > turan_edges(2, v)) return {};
  const auto levels = walk_triangle_free(v, static_cast<int>(e));
  std::vector<Graph> out;
  out.reserve(levels[e].size());
  for (const std::string& form : levels[e]) out.push_back(graph6_decode(form));
  return out;
}

const std::vector<Graph>& TriangleFreeCatalog::graphs(
    int v, std::uint64_t e, const ConstructionLimits& limits) {
  if (v < 1) throw argument_error("vertex count must be >= 1");
  check_block_cap(v, limits);
  static const std::vector<Graph> kEmpty;
  const std::uint64_t mantel = turan_edges(2, v);
  if (e > mantel) return kEmpty;

  const auto key = std::make_pair(v, e);
  if (auto it = decoded_.find(key); it != decoded_.end()) return it->second;

  PerOrder& po = walked_[v];
  if (po.computed_to < static_cast<int>(e)) {
    // Small orders are walked to full depth once; deep walks on big blocks
    // stop at the requested level.
    const int target = v <= 10 ? static_cast<int>(mantel)
                               : static_cast<int>(e);
    po.forms_by_edges = walk_triangle_free(v, target);
    po.computed_to = target;
  }
  std::vector<Graph> decoded;
  decoded.reserve(po.forms_by_edges[e].size());
  for (const std::string& form : po.forms_by_edges[e])
    decoded.push_back(graph6_decode(form));
  return decoded_.emplace(key, std::move(decoded)).first->second;
}

std::vector<FamilyMember> enumerate_h1_star(int n, std::uint64_t e,
                                            TriangleFreeCatalog& catalog,
                                            const ConstructionLimits& limits) {
  if (e < 1) throw argument_error("enumerate_h1_star requires e >= 1");
  const ExtremalProfile prof = profile(n, e, 3);
  const int k = prof.k;
  std::map<std::string, FamilyMember> members;
  if (k < 2) return {};

  std::vector<int> block_partners;  // 0-based index into a*[0..k-2]
  if (prof.m_star > 0) {
    block_partners.push_back(k - 2);
  } else {
    std::set<int> seen_sizes;
    for (int i = 0; i < k - 1; ++i)
      if (seen_sizes.insert(prof.a_star[i]).second) block_partners.push_back(i);
  }

  for (int i : block_partners) {
    const int block_size = prof.a_star[i] + prof.a_star[k - 1];
    const std::uint64_t block_edges =
        static_cast<std::uint64_t>(prof.a_star[i]) * prof.a_star[k - 1] -
        prof.m_star;
    check_block_cap(block_size, limits);
    std::vector<int> independent;
    for (int j = 0; j < k - 1; ++j)
      if (j != i) independent.push_back(prof.a_star[j]);

    for (const Graph& block : catalog.graphs(block_size, block_edges, limits)) {
      PartitionedGraph pg = assemble_with_block(independent, block);
      if (pg.graph().edge_count() != e)
        throw structural_error("H1* member edge count mismatch");
      std::string form = canonical_form(pg.graph());
      if (members.count(form)) continue;
      FamilyWitness witness;
      witness.part_sizes = prof.a_star;
      witness.block_part = i + 1;
      witness.block_graph6 = graph6_encode(block);
      members.emplace(std::move(form),
                      FamilyMember{std::move(pg), FamilyTag::H1STAR,
                                   std::move(witness)});
    }
  }

  std::vector<FamilyMember> out;
  out.reserve(members.size());
  for (auto& [form, member] : members) out.push_back(std::move(member));
  return out;
}

namespace {

// All ways to remove `budget` cross edges from the complete multipartite
// base, each edge joining a last-part vertex to one of the `eligible` parts,
// with every last-part vertex sending all its removals into a single part.
void removal_patterns(const std::vector<int>& last_part,
                      const std::vector<std::vector<int>>& eligible_parts,
                      std::uint64_t budget,
                      std::vector<std::pair<int, int>>& current,
                      const std::function<void(
                          const std::vector<std::pair<int, int>>&)>& emit) {
  if (budget == 0) {
    emit(current);
    return;
  }
  if (last_part.empty()) return;
  const int x = last_part.front();
  const std::vector<int> rest(last_part.begin() + 1, last_part.end());
  // x removes nothing.
  removal_patterns(rest, eligible_parts, budget, current, emit);
  // x removes a non-empty subset of one eligible part.
  for (const auto& part : eligible_parts) {
    const int p = static_cast<int>(part.size());
    const std::uint64_t take_max =
        std::min<std::uint64_t>(budget, static_cast<std::uint64_t>(p));
    for (std::uint64_t submask = 1; submask < (std::uint64_t{1} << p);
         ++submask) {
      const std::uint64_t taken = Graph::popcount(submask);
      if (taken > take_max) continue;
      const std::size_t mark = current.size();
      for (std::uint64_t s = submask; s; s &= s - 1)
        current.emplace_back(x, part[Graph::countr_zero(s)]);
      removal_patterns(rest, eligible_parts, budget - taken, current, emit);
      current.resize(mark);
    }
  }
}

void add_removed_star_members(int n, std::uint64_t e,
                              const std::vector<int>& sizes, std::uint64_t m,
                              std::map<std::string, FamilyMember>& members) {
  const int k = static_cast<int>(sizes.size());
  PartitionedGraph base = complete_multipartite(sizes);
  const std::vector<int> last_part = mask_vertices(base.part_mask(k));
  std::vector<std::vector<int>> eligible;
  for (int i = 1; i <= k - 1; ++i)
    if (sizes[i - 1] == sizes[k - 2])
      eligible.push_back(mask_vertices(base.part_mask(i)));

  std::vector<std::pair<int, int>> current;
  removal_patterns(
      last_part, eligible, m, current,
      [&](const std::vector<std::pair<int, int>>& removed) {
        Graph g = base.graph();
        for (const auto& [u, v] : removed) g.remove_edge(u, v);
        if (g.vertex_count() != n || g.edge_count() != e)
          throw structural_error("H2* member edge count mismatch");
        std::string form = canonical_form(g);
        if (members.count(form)) return;
        FamilyWitness witness;
        witness.part_sizes = sizes;
        witness.removed_edges = removed;
        std::sort(witness.removed_edges.begin(), witness.removed_edges.end());
        members.emplace(std::move(form),
                        FamilyMember{PartitionedGraph(std::move(g),
                                                      base.part_of()),
                                     FamilyTag::H2STAR, std::move(witness)});
      });
}

}  // namespace

std::vector<FamilyMember> enumerate_h2_star(int n, std::uint64_t e,
                                            TriangleFreeCatalog& catalog,
                                            const ConstructionLimits& limits) {
  if (e < 1) throw argument_error("enumerate_h2_star requires e >= 1");
  const ExtremalProfile prof = profile(n, e, 3);
  const int k = prof.k;
  std::map<std::string, FamilyMember> members;
  if (k < 2) return {};

  // k-partite members of H1*.
  for (FamilyMember& m1 : enumerate_h1_star(n, e, catalog, limits)) {
    const Graph& g = m1.graph.graph();
    if (!is_k_colorable_in(g, g.vertex_mask(), k)) continue;
    std::string form = canonical_form(g);
    if (members.count(form)) continue;
    m1.tag = FamilyTag::H2STAR;
    members.emplace(std::move(form), std::move(m1));
  }

  if (prof.m_star > 0) {
    add_removed_star_members(n, e, prof.a_star, prof.m_star, members);
  } else if (prof.a_star[0] >= prof.a_star[k - 1] + 2) {
    // Resized variant: one vertex migrates from the largest part into the
    // last part, paid for by removing a1 - ak - 1 cross edges.
    std::vector<int> resized;
    for (int j = 1; j < k - 1; ++j) resized.push_back(prof.a_star[j]);
    resized.push_back(prof.a_star[0] - 1);
    resized.push_back(prof.a_star[k - 1] + 1);
    const std::uint64_t m =
        static_cast<std::uint64_t>(prof.a_star[0] - prof.a_star[k - 1] - 1);
    add_removed_star_members(n, e, resized, m, members);
  }

  std::vector<FamilyMember> out;
  out.reserve(members.size());
  for (auto& [form, member] : members) out.push_back(std::move(member));
  return out;
}

bool is_member_K_family(const Graph& g, int n, std::uint64_t e) {
  if (!basic_shape_ok(g, n, e)) return false;
  return partite_family_member(g, std::nullopt);
}

bool is_member_h1(const Graph& g, int n, std::uint64_t e) {
  if (!basic_shape_ok(g, n, e) || e == 0) return false;
  const int k = chromatic_threshold(n, e);
  if (k < 2) return false;
  return partite_family_member(g, k - 1);
}

bool is_member_h0(const Graph& g, int n, std::uint64_t e) {
  if (!basic_shape_ok(g, n, e) || e == 0) return false;
  const int k = chromatic_threshold(n, e);
  if (k < 2) return false;
  const ComponentView view = component_view(g);
  int dirty = 0;
  for (std::size_t c = 0; c < view.masks.size(); ++c) {
    if (!view.dirty[c]) continue;
    ++dirty;
    if (count_cliques_in(g, view.masks[c], 3) != 0) return false;
  }
  const int clean = static_cast<int>(view.masks.size()) - dirty;
  // Dirty components are parts on their own; clean ones sit alone or merge
  // in complete-bipartite pairs, so the part count is adjustable between
  // dirty+ceil(clean/2) and dirty+clean.
  const int parts = k - 1;
  return dirty <= parts && dirty + clean >= parts &&
         clean <= 2 * (parts - dirty);
}

bool is_member_h1_star(const Graph& g, int n, std::uint64_t e,
                       FamilyWitness* witness) {
  if (!basic_shape_ok(g, n, e) || e == 0) return false;
  const ExtremalProfile prof = profile(n, e, 3);
  const int k = prof.k;
  if (k < 2) return false;
  const ComponentView view = component_view(g);

  std::vector<int> block_partners;
  if (prof.m_star > 0) {
    block_partners.push_back(k - 2);
  } else {
    std::set<int> seen;
    for (int i = 0; i < k - 1; ++i)
      if (seen.insert(prof.a_star[i]).second) block_partners.push_back(i);
  }

  for (int i : block_partners) {
    std::map<int, int> need;  // part size -> count among untouched parts
    for (int j = 0; j < k - 1; ++j)
      if (j != i) ++need[prof.a_star[j]];

    std::uint64_t block_mask = 0;
    bool feasible = true;
    std::map<int, int> used;
    for (std::size_t c = 0; c < view.masks.size() && feasible; ++c) {
      if (view.dirty[c]) {
        block_mask |= view.masks[c];
        continue;
      }
      auto it = need.find(view.size[c]);
      if (it != need.end() && used[view.size[c]] < it->second) {
        ++used[view.size[c]];  // equal-size clean components are swappable
      } else {
        block_mask |= view.masks[c];
      }
    }
    for (const auto& [size, count] : need)
      if (used[size] != count) feasible = false;
    if (!feasible) continue;

    const int block_size = prof.a_star[i] + prof.a_star[k - 1];
    const std::uint64_t block_edges =
        static_cast<std::uint64_t>(prof.a_star[i]) * prof.a_star[k - 1] -
        prof.m_star;
    if (Graph::popcount(block_mask) != block_size) continue;
    if (edges_within(g, block_mask) != block_edges) continue;
    if (count_cliques_in(g, block_mask, 3) != 0) continue;

    if (witness) {
      witness->part_sizes = prof.a_star;
      witness->block_part = i + 1;
      witness->block_graph6 = graph6_encode(induced_subgraph(g, block_mask));
      witness->removed_edges.clear();
    }
    return true;
  }
  return false;
}

bool is_member_h2_star(const Graph& g, int n, std::uint64_t e,
                       FamilyWitness* witness) {
  if (!basic_shape_ok(g, n, e) || e == 0) return false;
  const ExtremalProfile prof = profile(n, e, 3);
  const int k = prof.k;
  if (k < 2) return false;

  FamilyWitness h1_witness;
  if (is_member_h1_star(g, n, e, &h1_witness) &&
      is_k_colorable_in(g, g.vertex_mask(), k)) {
    if (witness) *witness = std::move(h1_witness);
    return true;
  }

  if (prof.m_star > 0) {
    if (removed_star_pattern_match(g, prof.a_star, prof.m_star)) {
      if (witness) {
        witness->part_sizes = prof.a_star;
        witness->block_part = -1;
        witness->block_graph6.clear();
      }
      return true;
    }
    return false;
  }
  if (prof.a_star[0] >= prof.a_star[k - 1] + 2) {
    std::vector<int> resized;
    for (int j = 1; j < k - 1; ++j) resized.push_back(prof.a_star[j]);
    resized.push_back(prof.a_star[0] - 1);
    resized.push_back(prof.a_star[k - 1] + 1);
    const std::uint64_t m =
        static_cast<std::uint64_t>(prof.a_star[0] - prof.a_star[k - 1] - 1);
    if (removed_star_pattern_match(g, resized, m)) {
      if (witness) {
        witness->part_sizes = resized;
        witness->block_part = -1;
        witness->block_graph6.clear();
      }
      return true;
    }
  }
  return false;
}

PartitionedGraph normalize_h0(const PartitionedGraph& pg) {
  const Graph& g = pg.graph();
  if (!pg.cross_parts_complete())
    throw structural_error(
        "precondition failed: every cross-part pair is adjacent");
  if (!pg.parts_triangle_free())
    throw structural_error(
        "precondition failed: each part induces a triangle-free graph");

  const int parts = pg.part_count();
  std::vector<std::uint64_t> part_mask(parts + 1);
  std::vector<std::uint64_t> part_edges(parts + 1);
  std::vector<std::uint64_t> part_full(parts + 1);
  int partially_full = 0, chosen = -1;
  for (int i = 1; i <= parts; ++i) {
    part_mask[i] = pg.part_mask(i);
    part_edges[i] = edges_within(g, part_mask[i]);
    part_full[i] = turan_edges(2, Graph::popcount(part_mask[i]));
    if (part_edges[i] > 0 && part_edges[i] < part_full[i]) {
      ++partially_full;
      chosen = i;
    }
  }
  if (partially_full > 1)
    throw structural_error(
        "precondition failed: more than one partially full part");
  if (chosen == -1) {
    for (int i = 1; i <= parts && chosen == -1; ++i)
      if (part_edges[i] > 0 && part_edges[i] == part_full[i]) chosen = i;
  }
  if (chosen == -1)
    throw normalization_error(
        "normalization inapplicable: every part is internally empty");

  // Step 2: the graph minus the chosen part is complete multipartite; full
  // parts contribute their two bipartition classes, empty parts themselves.
  std::vector<std::uint64_t> groups;
  for (int i = 1; i <= parts; ++i) {
    if (i == chosen) continue;
    if (part_edges[i] == 0) {
      groups.push_back(part_mask[i]);
      continue;
    }
    const Graph inside = induced_subgraph(g, part_mask[i]);
    const std::vector<std::uint64_t> halves = complement_components(inside);
    if (halves.size() != 2)
      throw structural_error(
          "precondition failed: full part is not complete bipartite");
    const std::vector<int> verts = mask_vertices(part_mask[i]);
    for (const std::uint64_t half : halves) {
      std::uint64_t mask = 0;
      for (std::uint64_t rest = half; rest; rest &= rest - 1)
        mask |= Graph::bit(verts[Graph::countr_zero(rest)]);
      groups.push_back(mask);
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int pa = Graph::popcount(a), pb = Graph::popcount(b);
              return pa != pb ? pa > pb : a < b;
            });

  // Step 3: split the chosen part B so that its interior edge count x lands
  // in ((a+1)(b-1), ab]; consecutive intervals tile (0, t2(|B|)], so the
  // split sizes are unique.
  const std::uint64_t b_mask = part_mask[chosen];
  const int b_size = Graph::popcount(b_mask);
  const std::uint64_t x = part_edges[chosen];
  int small = -1;
  for (int j = b_size / 2; j >= 1; --j) {
    const std::uint64_t upper = static_cast<std::uint64_t>(b_size - j) * j;
    const std::uint64_t lower =
        static_cast<std::uint64_t>(b_size - j + 1) * (j - 1);
    if (lower < x && x <= upper) {
      small = j;
      break;
    }
  }
  if (small == -1)
    throw structural_error("no split with the sandwich property exists");
  const int large = b_size - small;

  std::uint64_t large_mask, small_mask;
  if (x == part_full[chosen]) {
    // Full part: keep its own bipartition, larger class first.
    const Graph inside = induced_subgraph(g, b_mask);
    const std::vector<std::uint64_t> halves = complement_components(inside);
    if (halves.size() != 2)
      throw structural_error(
          "precondition failed: full part is not complete bipartite");
    const std::vector<int> verts = mask_vertices(b_mask);
    std::uint64_t h0 = 0, h1 = 0;
    for (std::uint64_t rest = halves[0]; rest; rest &= rest - 1)
      h0 |= Graph::bit(verts[Graph::countr_zero(rest)]);
    for (std::uint64_t rest = halves[1]; rest; rest &= rest - 1)
      h1 |= Graph::bit(verts[Graph::countr_zero(rest)]);
    large_mask = Graph::popcount(h0) >= Graph::popcount(h1) ? h0 : h1;
    small_mask = b_mask & ~large_mask;
  } else {
    const std::vector<int> verts = mask_vertices(b_mask);
    large_mask = 0;
    for (int idx = 0; idx < large; ++idx) large_mask |= Graph::bit(verts[idx]);
    small_mask = b_mask & ~large_mask;
  }

  // Step 4: rebuild B's interior as complete bipartite minus an m'-edge star.
  const std::uint64_t m_prime =
      static_cast<std::uint64_t>(large) * small - x;
  Graph out = g;
  {
    const std::vector<int> verts = mask_vertices(b_mask);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        out.remove_edge(verts[a], verts[b]);
  }
  const std::vector<int> large_verts = mask_vertices(large_mask);
  const std::vector<int> small_verts = mask_vertices(small_mask);
  for (int u : large_verts)
    for (int v : small_verts) out.add_edge(u, v);
  const int centre = small_verts.front();
  for (std::uint64_t i = 0; i < m_prime; ++i)
    out.remove_edge(centre, large_verts[i]);

  if (out.edge_count() != g.edge_count())
    throw structural_error("normalization changed the edge count");

  std::vector<int> part_of(g.vertex_count());
  int label = 1;
  for (const std::uint64_t group : groups) {
    for (std::uint64_t rest = group; rest; rest &= rest - 1)
      part_of[Graph::countr_zero(rest)] = label;
    ++label;
  }
  for (std::uint64_t rest = large_mask; rest; rest &= rest - 1)
    part_of[Graph::countr_zero(rest)] = label;
  ++label;
  for (std::uint64_t rest = small_mask; rest; rest &= rest - 1)
    part_of[Graph::countr_zero(rest)] = label;
  return {std::move(out), std::move(part_of)};
}

Prop12Result prop12_construction(int p, int q, int m) {
  if (p < 3) throw argument_error("prop12_construction requires p >= 3");
  if (q < 2) throw argument_error("prop12_construction requires q >= 2");
  if (m < 2 || m > q)
    throw argument_error("prop12_construction requires 2 <= m <= q");
  const int n = 2 * p * q + q;
  if (n > Graph::kMaxVertices)
    throw argument_error("construction needs " + std::to_string(n) +
                         " vertices, above the 64-vertex cap");

  std::vector<int> sizes(p, 2 * q);
  sizes.push_back(q);
  PartitionedGraph base = complete_multipartite(sizes);
  Graph g = base.graph();
  const std::vector<int> small_part = mask_vertices(base.part_mask(p + 1));
  for (int i = 0; i < m; ++i) {
    const int u = mask_vertices(base.part_mask(i + 1)).front();
    g.remove_edge(small_part[i], u);
  }

  Prop12Result out;
  out.n = n;
  out.e = binom2(p) * (2 * q) * (2 * q) +
          static_cast<std::uint64_t>(2) * p * q * q - m;
  if (g.edge_count() != out.e)
    throw structural_error("prop12 edge count mismatch");
  out.graph = std::move(g);
  return out;
}

}  // namespace erlab
