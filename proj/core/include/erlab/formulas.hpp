#pragma once

#include <cstdint>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

/// C(n,2) as an exact integer.
std::uint64_t binom2(std::uint64_t n);

/// Edge count of the balanced complete s-partite graph on n vertices.
/// n < s is allowed (some parts empty) and gives C(n,2).
std::uint64_t turan_edges(int s, int n);

/// Balanced non-increasing part sizes of the Turan graph T_s(n).
std::vector<int> turan_part_sizes(int s, int n);

/// Edge count of the complete multipartite graph with the given part sizes
/// (zeros allowed): the sum of products over unordered part pairs.
std::uint64_t complete_multipartite_edges(const std::vector<int>& sizes);

/// Least s with t_s(n) >= e; 1 when e = 0. The least chromatic number an
/// (n,e)-graph can have.
int chromatic_threshold(int n, std::uint64_t e);

/// Least a >= 1 with a(n-a) + t_{k-1}(n-a) >= e: the smallest part size a
/// k-partite (n,e)-graph can have. Requires k = chromatic_threshold(n,e)
/// and k >= 2.
int smallest_part(int n, std::uint64_t e, int k);

/// The predictor state for a cell (n, e, r): the part-size vector a*, the
/// edge surplus m*, and the predicted minimum r-clique count h*_r.
struct ExtremalProfile {
  int n = 0;
  std::uint64_t e = 0;
  int r = 0;
  int k = 0;
  std::vector<int> a_star;
  std::uint64_t m_star = 0;
  std::uint64_t h_star = 0;
};

/// Computes the full profile. e = 0 yields the degenerate convention
/// k = 1, a* = (n), m* = 0, h* = 0.
ExtremalProfile profile(int n, std::uint64_t e, int r);

/// Strict monotonicity of f(a) = a(n-a) + t_{k-1}(n-a): evaluates
/// a(n-a)+t_{k-1}(n-a) > (a-1)(n-a+1)+t_{k-1}(n-a+1) exactly.
/// Requires a >= 1, k >= 2, n >= ak.
bool lemma_d_holds(int a, int k, int n);

/// Sum over r-subsets I of the first `take` entries of the products of the
/// selected entries (the elementary symmetric polynomial e_r). Empty sums
/// are 0 and the empty product is 1.
std::uint64_t elementary_symmetric(const std::vector<int>& values, int take,
                                   int r);

}  // namespace erlab
