#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erlab/formulas.hpp"
#include "erlab/graph.hpp"

namespace erlab {

enum class FamilyTag { HSTAR, H1STAR, H2STAR, H0, K_FAMILY };

const char* to_string(FamilyTag tag);

/// Enough structure to re-derive membership: the part sizes the build used,
/// the replaced block (part index, 1-based, pairing with the last part) with
/// its triangle-free interior, and/or the removed cross edges.
struct FamilyWitness {
  std::vector<int> part_sizes;
  int block_part = -1;
  std::string block_graph6;
  std::vector<std::pair<int, int>> removed_edges;
};

struct FamilyMember {
  PartitionedGraph graph;
  FamilyTag tag;
  FamilyWitness witness;
};

struct ConstructionLimits {
  int max_block = 12;
};

/// Complete multipartite graph over the independent parts plus one block
/// part, placed last, whose interior is the given triangle-free graph.
PartitionedGraph assemble_with_block(const std::vector<int>& independent_sizes,
                                     const Graph& block);

/// The predictor's witness graph: complete k-partite on a*(n,e) minus an
/// m*-edge star with centre in the last part and leaves in the second-to-
/// last part. Edge count is exactly e.
FamilyMember build_h_star(int n, std::uint64_t e);

/// All triangle-free graphs on v vertices with exactly e edges, one per
/// isomorphism class, sorted by canonical form. Empty when e > t_2(v).
std::vector<Graph> enumerate_triangle_free(int v, std::uint64_t e,
                                           const ConstructionLimits& limits = {});

/// Memoized triangle-free enumeration keyed by (v, e); the same blocks recur
/// across part compositions, so lookups after the first walk are free.
class TriangleFreeCatalog {
 public:
  const std::vector<Graph>& graphs(int v, std::uint64_t e,
                                   const ConstructionLimits& limits = {});

 private:
  struct PerOrder {
    std::vector<std::vector<std::string>> forms_by_edges;  // graph6, sorted
    int computed_to = -1;
  };
  std::map<int, PerOrder> walked_;
  std::map<std::pair<int, std::uint64_t>, std::vector<Graph>> decoded_;
};

/// The family H1*(n,e): the complete k-partite graph on a* with one
/// designated two-part block replaced by a triangle-free graph of prescribed
/// size. Pairwise non-isomorphic, sorted by canonical form.
std::vector<FamilyMember> enumerate_h1_star(int n, std::uint64_t e,
                                            TriangleFreeCatalog& catalog,
                                            const ConstructionLimits& limits = {});

/// The family H2*(n,e): k-partite members of H1*(n,e), plus all ways of
/// removing m* edges from disjoint subsets of the last part into the
/// equal-largest parts, plus the resized variant when m* = 0.
std::vector<FamilyMember> enumerate_h2_star(int n, std::uint64_t e,
                                            TriangleFreeCatalog& catalog,
                                            const ConstructionLimits& limits = {});

/// Membership tests; all decide by searching for a witnessing partition and
/// return false on any structural mismatch.
bool is_member_K_family(const Graph& g, int n, std::uint64_t e);
bool is_member_h0(const Graph& g, int n, std::uint64_t e);

/// Complete (k-1)-partite plus a triangle-free graph in one part.
bool is_member_h1(const Graph& g, int n, std::uint64_t e);

bool is_member_h1_star(const Graph& g, int n, std::uint64_t e,
                       FamilyWitness* witness = nullptr);
bool is_member_h2_star(const Graph& g, int n, std::uint64_t e,
                       FamilyWitness* witness = nullptr);

/// Steps 1-4: pick the unique partially full part (or the lowest-index full
/// part with edges), split it, and rebuild as a complete t-partite graph
/// minus an m'-edge star. Preserves n, e and every clique count.
PartitionedGraph normalize_h0(const PartitionedGraph& g);

struct Prop12Result {
  int n = 0;
  std::uint64_t e = 0;
  Graph graph{1};
};

/// Explicit split-star construction: p parts of size 2q and one of size q,
/// with m removed edges going from m distinct small-part vertices into m
/// distinct large parts. Requires p >= 3, q >= 2, 2 <= m <= q.
Prop12Result prop12_construction(int p, int q, int m);

/// Connected components of the complement, as vertex masks.
std::vector<std::uint64_t> complement_components(const Graph& g);

}  // namespace erlab
