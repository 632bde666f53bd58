#include "doctest.h"

#include <array>
#include <map>
#include <random>
#include <set>

#include "erlab/canonical.hpp"
#include "erlab/graph6.hpp"
#include "support/oracles.hpp"

using namespace erlab;
using namespace erlab::testing;

TEST_CASE("isomorphic graphs share one form, non-isomorphic do not") {
  const Graph c4 = Graph::cycle(4);
  Graph c4_relabeled(4);
  c4_relabeled.add_edge(0, 2);
  c4_relabeled.add_edge(2, 1);
  c4_relabeled.add_edge(1, 3);
  c4_relabeled.add_edge(3, 0);
  CHECK(canonical_form(c4) == canonical_form(c4_relabeled));
  CHECK(canonical_form(c4) != canonical_form(Graph::path(4)));
}

TEST_CASE("forms are invariant under random relabeling") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    const Graph g = random_graph(n, rng);
    const Graph h = apply_permutation(g, random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("labeled graphs fall into the known numbers of classes") {
  const int expected[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 4; n <= 6; ++n) {
    std::set<std::string> forms;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code)
      forms.insert(canonical_form(graph_from_bits(n, code)));
    CHECK(static_cast<int>(forms.size()) == expected[n]);
  }
}

TEST_CASE("the form decides isomorphism exactly (brute-force cross-check)") {
  // All 1024 labeled graphs on 5 vertices, grouped by form; every pair inside
  // a group must be isomorphic, every cross-group pair with matching cheap
  // invariants must not be.
  std::map<std::string, std::vector<Graph>> groups;
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    const Graph g = graph_from_bits(5, bits);
    groups[canonical_form(g)].push_back(g);
  }
  CHECK(groups.size() == 34);
  std::mt19937_64 rng(23);
  for (const auto& [form, members] : groups) {
    for (int check = 0; check < 3 && members.size() > 1; ++check) {
      const Graph& a = members[rng() % members.size()];
      const Graph& b = members[rng() % members.size()];
      CHECK(brute_isomorphic(a, b));
    }
  }
  // Distinct forms with equal vertex and edge counts are non-isomorphic.
  std::vector<const Graph*> reps;
  for (const auto& [form, members] : groups) reps.push_back(&members.front());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i]->edge_count() == reps[j]->edge_count())
        CHECK(!brute_isomorphic(*reps[i], *reps[j]));
}

TEST_CASE("the canonical form is the graph6 of the relabeled graph") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(7, rng);
    const CanonicalResult canon = canonicalize(g);
    Graph relabeled(7);
    for (const auto& [u, v] : g.edges())
      relabeled.add_edge(canon.labeling[u], canon.labeling[v]);
    CHECK(graph6_encode(relabeled) == canon.form);
    CHECK(graph6_decode(canon.form) == relabeled);
  }
}

TEST_CASE("reported generators are automorphisms") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    for (const std::vector<int>& gen :
         canonicalize(g).automorphism_generators)
      CHECK(apply_permutation(g, gen) == g);
  }
}

TEST_CASE("highly symmetric graphs: Petersen orbits and invariance") {
  // Kneser graph K(5,2): vertices are the 2-subsets of {0..4}, edges join
  // disjoint pairs. Vertex- and edge-transitive, a classic hard case for
  // naive refinement.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph petersen(10);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d)
        petersen.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  CHECK(petersen.edge_count() == 15);
  CHECK(count_cliques(petersen, 3) == 0);

  std::mt19937_64 rng(37);
  const std::string form = canonical_form(petersen);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(canonical_form(
              apply_permutation(petersen, random_permutation(10, rng))) ==
          form);

  const CanonicalResult canon = canonicalize(petersen);
  const std::vector<int> orbits =
      pair_orbits(10, canon.automorphism_generators);
  std::set<int> edge_orbits, nonedge_orbits;
  for (int v = 1; v < 10; ++v)
    for (int u = 0; u < v; ++u)
      (petersen.has_edge(u, v) ? edge_orbits : nonedge_orbits)
          .insert(orbits[pair_index(u, v, 10)]);
  CHECK(edge_orbits.size() == 1);
  CHECK(nonedge_orbits.size() == 1);
}

TEST_CASE("circulants and disjoint unions stay invariant") {
  std::mt19937_64 rng(43);
  for (int n : {8, 10, 12}) {
    for (std::uint64_t offsets = 1; offsets < 8; ++offsets) {
      Graph g(n);
      for (int d = 1; d <= n / 2; ++d) {
        if (!((offsets >> (d % 3)) & 1)) continue;
        for (int v = 0; v < n; ++v) {
          const int w = (v + d) % n;
          if (v != w && !g.has_edge(v, w)) g.add_edge(v, w);
        }
      }
      const std::string form = canonical_form(g);
      for (int trial = 0; trial < 5; ++trial)
        CHECK(canonical_form(apply_permutation(
                  g, random_permutation(n, rng))) == form);
    }
  }
  // Two disjoint copies of the same random piece, interleaved two ways.
  for (int trial = 0; trial < 40; ++trial) {
    const Graph piece = random_graph(5, rng);
    Graph doubled(10);
    for (const auto& [u, v] : piece.edges()) {
      doubled.add_edge(u, v);
      doubled.add_edge(u + 5, v + 5);
    }
    CHECK(canonical_form(apply_permutation(
              doubled, random_permutation(10, rng))) ==
          canonical_form(doubled));
  }
}

TEST_CASE("same degree sequence pairs agree with brute-force isomorphism") {
  std::mt19937_64 rng(47);
  int compared = 0;
  while (compared < 150) {
    const Graph a = random_graph(7, rng);
    const Graph b = random_graph(7, rng);
    if (a.edge_count() != b.edge_count()) continue;
    std::array<int, 7> da{}, db{};
    for (int v = 0; v < 7; ++v) {
      da[v] = a.degree(v);
      db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) continue;
    ++compared;
    CHECK(are_isomorphic(a, b) == brute_isomorphic(a, b));
  }
}

TEST_CASE("complement duality of isomorphism") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, rng);
    const Graph h = apply_permutation(g, random_permutation(n, rng));
    CHECK(canonical_form(complement(g)) == canonical_form(complement(h)));
  }
}

TEST_CASE("pair orbits of a star separate spokes from the rim") {
  // Star K_{1,4}: all edges lie in one orbit, all rim non-edges in another.
  Graph star(5);
  for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  const CanonicalResult canon = canonicalize(star);
  const std::vector<int> orbits = pair_orbits(5, canon.automorphism_generators);
  std::set<int> edge_orbits, nonedge_orbits;
  for (int v = 1; v < 5; ++v)
    for (int u = 0; u < v; ++u)
      (star.has_edge(u, v) ? edge_orbits : nonedge_orbits)
          .insert(orbits[pair_index(u, v, 5)]);
  CHECK(edge_orbits.size() == 1);
  CHECK(nonedge_orbits.size() == 1);
}
