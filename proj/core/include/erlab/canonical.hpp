#pragma once

#include <string>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

/// Canonical labeling output. `labeling[v]` is the position of vertex v in
/// the canonical order; `form` is the graph6 string of the relabeled graph,
/// equal between two graphs iff they are isomorphic. The automorphism
/// generators collected during the search generate the full automorphism
/// group of the input.
struct CanonicalResult {
  std::vector<int> labeling;
  std::string form;
  std::vector<std::vector<int>> automorphism_generators;
};

CanonicalResult canonicalize(const Graph& g);

/// Shorthand when only the isomorphism-invariant byte string is needed.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Orbit identifiers for vertex pairs u<v under the group generated by the
/// given permutations: orbits[pair_index(u,v,n)] is the smallest pair index
/// in the orbit. pair_index enumerates pairs as (0,1),(0,2),(1,2),(0,3),...
std::vector<int> pair_orbits(int n,
                             const std::vector<std::vector<int>>& generators);

int pair_index(int u, int v, int n);

}  // namespace erlab
