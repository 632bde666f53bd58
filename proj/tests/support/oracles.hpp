// Test-only reference implementations, independent of the library's
// counting and enumeration paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab::testing {

// Clique count by scanning every r-subset.
inline std::uint64_t naive_count_cliques(const Graph& g, int r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  const int n = g.vertex_count();
  if (r > n) return 0;
  std::vector<int> pick(r);
  std::uint64_t total = 0;
  auto rec = [&](auto&& self, int next, int depth) -> void {
    if (depth == r) {
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          if (!g.has_edge(pick[i], pick[j])) return;
      ++total;
      return;
    }
    for (int v = next; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

inline Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if ((bits >> t) & 1) g.add_edge(u, v);
      ++t;
    }
  return g;
}

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (apply_permutation(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Number of isomorphism classes of n-vertex graphs per edge count, by
// Burnside's lemma over the pair action of S_n: an algebraic route fully
// independent of canonical labeling and generation.
inline std::vector<std::uint64_t> graph_class_counts(int n) {
  using BigInt = unsigned __int128;
  const int pairs = n * (n - 1) / 2;
  std::vector<BigInt> total(pairs + 1, 0);

  std::vector<int> lambda;
  auto factorial = [](int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  auto process = [&](const std::vector<int>& type) {
    // Permutations with this cycle type.
    std::map<int, int> mult;
    for (int c : type) ++mult[c];
    std::uint64_t denom = 1;
    for (const auto& [len, count] : mult) {
      for (int i = 0; i < count; ++i) denom *= static_cast<std::uint64_t>(len);
      denom *= factorial(count);
    }
    const std::uint64_t weight = factorial(n) / denom;

    // Orbit lengths of the induced action on vertex pairs.
    std::vector<int> orbit_lengths;
    for (std::size_t i = 0; i < type.size(); ++i) {
      const int c = type[i];
      if (c % 2 == 0) {
        for (int d = 1; d < c / 2; ++d) orbit_lengths.push_back(c);
        orbit_lengths.push_back(c / 2);
      } else {
        for (int d = 1; d <= (c - 1) / 2; ++d) orbit_lengths.push_back(c);
      }
      for (std::size_t j = i + 1; j < type.size(); ++j) {
        const int c2 = type[j];
        const int g = std::gcd(c, c2);
        for (int k = 0; k < g; ++k) orbit_lengths.push_back(c * c2 / g);
      }
    }
    // Fixed graphs with e edges = coefficient of x^e in prod (1 + x^len).
    std::vector<BigInt> poly(pairs + 1, 0);
    poly[0] = 1;
    for (int len : orbit_lengths)
      for (int d = pairs; d >= len; --d) poly[d] += poly[d - len];
    for (int e = 0; e <= pairs; ++e) total[e] += weight * poly[e];
  };
  auto gen = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      process(lambda);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      lambda.push_back(part);
      self(self, rest - part, part);
      lambda.pop_back();
    }
  };
  gen(gen, n, n);

  const std::uint64_t order = factorial(n);
  std::vector<std::uint64_t> out(pairs + 1);
  for (int e = 0; e <= pairs; ++e)
    out[e] = static_cast<std::uint64_t>(total[e] / order);
  return out;
}

}  // namespace erlab::testing
