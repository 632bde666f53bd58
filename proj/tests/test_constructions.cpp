#include "doctest.h"

#include <set>

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"
#include "erlab/formulas.hpp"
#include "erlab/graph6.hpp"
#include "support/oracles.hpp"

using namespace erlab;
using namespace erlab::testing;

TEST_CASE("H* on pinned cells") {
  const FamilyMember h = build_h_star(8, 22);
  CHECK(h.graph.graph().edge_count() == 22);
  CHECK(count_cliques(h.graph.graph(), 4) == 6);
  CHECK(h.witness.removed_edges.size() == 1);

  // At the Turan count nothing is removed.
  const FamilyMember t = build_h_star(9, turan_edges(3, 9));
  CHECK(t.witness.removed_edges.empty());
  CHECK(are_isomorphic(t.graph.graph(),
                       complete_multipartite({3, 3, 3}).graph()));

  const FamilyMember big = build_h_star(14, 70);
  CHECK(big.graph.graph().edge_count() == 70);
  CHECK(count_cliques(big.graph.graph(), 4) == 96);
  CHECK(big.witness.removed_edges.size() == 2);
}

TEST_CASE("triangle-free enumeration on pinned cells") {
  CHECK(enumerate_triangle_free(4, 4).size() == 1);
  CHECK(are_isomorphic(enumerate_triangle_free(4, 4).front(), Graph::cycle(4)));
  CHECK(enumerate_triangle_free(5, 7).empty());  // above the Mantel bound
  CHECK(enumerate_triangle_free(4, 0).size() == 1);

  ConstructionLimits tight;
  tight.max_block = 6;
  CHECK_THROWS_AS(enumerate_triangle_free(7, 3, tight), capacity_error);
}

TEST_CASE("triangle-free catalog memoizes and matches the direct walk") {
  TriangleFreeCatalog catalog;
  for (int v = 2; v <= 7; ++v)
    for (std::uint64_t e = 0; e <= turan_edges(2, v); ++e) {
      const auto& cached = catalog.graphs(v, e);
      CHECK(cached.size() == enumerate_triangle_free(v, e).size());
      // Second lookup returns the identical object.
      CHECK(&catalog.graphs(v, e) == &cached);
    }
}

TEST_CASE("H1* members all attain the same clique counts") {
  TriangleFreeCatalog catalog;

  // (4,5): k=3, a*=(2,1,1), m*=0; the family collapses to K4 minus an edge.
  const auto h1_45 = enumerate_h1_star(4, 5, catalog);
  CHECK(h1_45.size() == 1);
  CHECK(count_cliques(h1_45.front().graph.graph(), 3) == 2);

  // (8,22): one member, six 4-cliques.
  const auto h1_822 = enumerate_h1_star(8, 22, catalog);
  for (const FamilyMember& m : h1_822) {
    CHECK(m.graph.graph().edge_count() == 22);
    CHECK(count_cliques(m.graph.graph(), 4) == 6);
  }

  // H* is always a member, and members are pairwise non-isomorphic.
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t e = 1; e <= binom2(n); ++e) {
      const auto members = enumerate_h1_star(n, e, catalog);
      const std::string h_star_form =
          canonical_form(build_h_star(n, e).graph.graph());
      std::set<std::string> forms;
      bool found = false;
      for (const FamilyMember& m : members) {
        const std::string form = canonical_form(m.graph.graph());
        CHECK(forms.insert(form).second);
        found |= form == h_star_form;
        CHECK(m.graph.graph().edge_count() == e);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("H2* at (14,70) contains the split-star member outside H1*") {
  TriangleFreeCatalog catalog;
  const auto members = enumerate_h2_star(14, 70, catalog);
  CHECK(!members.empty());
  int outside_h1 = 0;
  for (const FamilyMember& m : members) {
    CHECK(m.graph.graph().edge_count() == 70);
    CHECK(count_cliques(m.graph.graph(), 4) == 96);
    if (!is_member_h1_star(m.graph.graph(), 14, 70)) ++outside_h1;
  }
  CHECK(outside_h1 > 0);
}

TEST_CASE("H2* at (8,22) attains the predicted count") {
  TriangleFreeCatalog catalog;
  for (const FamilyMember& m : enumerate_h2_star(8, 22, catalog))
    CHECK(count_cliques(m.graph.graph(), 4) == 6);
}

TEST_CASE("H2* collapses to k-partite H1* when no removals or resize apply") {
  TriangleFreeCatalog catalog;
  for (int n = 4; n <= 9; ++n) {
    for (std::uint64_t e = 1; e <= binom2(n); ++e) {
      const ExtremalProfile p = profile(n, e, 3);
      if (p.k < 2 || p.m_star != 0) continue;
      if (p.a_star[0] >= p.a_star[p.k - 1] + 2) continue;
      std::set<std::string> h2_forms, h1_partite_forms;
      for (const FamilyMember& m : enumerate_h2_star(n, e, catalog))
        h2_forms.insert(canonical_form(m.graph.graph()));
      for (const FamilyMember& m : enumerate_h1_star(n, e, catalog)) {
        const Graph& g = m.graph.graph();
        if (is_k_colorable_in(g, g.vertex_mask(), p.k))
          h1_partite_forms.insert(canonical_form(g));
      }
      CHECK(h2_forms == h1_partite_forms);
      CHECK(h2_forms.count(
          canonical_form(complete_multipartite(p.a_star).graph())) == 1);
    }
  }
}

TEST_CASE("membership tests on pinned graphs") {
  const Graph h = build_h_star(8, 22).graph.graph();
  CHECK(is_member_K_family(h, 8, 22));
  CHECK(is_member_h0(h, 8, 22));
  CHECK(is_member_h1(h, 8, 22));
  CHECK(is_member_h1_star(h, 8, 22));
  CHECK(is_member_h2_star(h, 8, 22));

  // C5: one part with a triangle-free addition. With k(5,5)=2 the designated
  // block spans everything, so C5 also sits in H1*(5,5).
  const Graph c5 = Graph::cycle(5);
  CHECK(is_member_K_family(c5, 5, 5));
  CHECK(is_member_h1_star(c5, 5, 5));

  // A triangle with its mirror (two dirty complement components) is in no
  // family, and wrong (n, e) always fails.
  Graph two_triangles(6);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_triangles.add_edge(base + i, base + (i + 1) % 3);
  CHECK(!is_member_K_family(two_triangles, 6, 6));
  CHECK(!is_member_h0(two_triangles, 6, 6));
  CHECK(!is_member_K_family(h, 8, 21));
}

TEST_CASE("memberships recognize every enumerated member") {
  TriangleFreeCatalog catalog;
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t e = 1; e <= binom2(n); ++e) {
      for (const FamilyMember& m : enumerate_h1_star(n, e, catalog)) {
        const Graph& g = m.graph.graph();
        CHECK(is_member_h1_star(g, n, e));
        CHECK(is_member_h1(g, n, e));
        CHECK(is_member_K_family(g, n, e));
        CHECK(is_member_h0(g, n, e));
      }
      for (const FamilyMember& m : enumerate_h2_star(n, e, catalog))
        CHECK(is_member_h2_star(m.graph.graph(), n, e));
    }
  }
}

TEST_CASE("normalization fixes H* viewed as an H0 witness") {
  const FamilyMember h = build_h_star(8, 22);
  std::vector<int> merged = h.graph.part_of();
  for (int& label : merged)
    if (label == 4) label = 3;
  const PartitionedGraph h0_view(h.graph.graph(), merged);
  const PartitionedGraph out = normalize_h0(h0_view);
  CHECK(are_isomorphic(out.graph(), h.graph.graph()));
}

TEST_CASE("normalization preserves counts on crafted witnesses") {
  // K[B1,B2] on sizes (4,4) with a partially full B1 (a path) and full B2.
  PartitionedGraph shell = complete_multipartite({4, 4});
  Graph g = shell.graph();
  g.add_edge(0, 1);
  g.add_edge(1, 2);          // two internal edges in B1: partially full
  g.add_edge(4, 5);
  g.add_edge(6, 7);
  g.add_edge(4, 6);
  g.add_edge(5, 7);          // B2 holds a full bipartite C4
  const PartitionedGraph witness(g, shell.part_of());
  const PartitionedGraph out = normalize_h0(witness);
  CHECK(out.graph().edge_count() == g.edge_count());
  for (int r = 3; r <= 5; ++r)
    CHECK(count_cliques(out.graph(), r) == count_cliques(g, r));
}

TEST_CASE("normalization error paths") {
  // Every part internally empty: nothing to normalize.
  const PartitionedGraph empty_parts = complete_multipartite({3, 3});
  CHECK_THROWS_AS(normalize_h0(empty_parts), normalization_error);

  // Two partially full parts violate the precondition.
  PartitionedGraph shell = complete_multipartite({3, 3});
  Graph g = shell.graph();
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  CHECK_THROWS_AS(normalize_h0(PartitionedGraph(g, shell.part_of())),
                  structural_error);

  // Cross pairs must be complete.
  Graph sparse(4);
  sparse.add_edge(0, 2);
  CHECK_THROWS_AS(normalize_h0(PartitionedGraph(sparse, {1, 1, 2, 2})),
                  structural_error);
}

TEST_CASE("split-star construction on pinned parameters") {
  const Prop12Result r = prop12_construction(3, 2, 2);
  CHECK(r.n == 14);
  CHECK(r.e == 70);
  CHECK(r.graph.edge_count() == 70);
  CHECK(is_member_h2_star(r.graph, r.n, r.e));
  CHECK(!is_member_h1_star(r.graph, r.n, r.e));

  CHECK_THROWS_AS(prop12_construction(2, 2, 2), argument_error);
  CHECK_THROWS_AS(prop12_construction(3, 1, 2), argument_error);
  CHECK_THROWS_AS(prop12_construction(3, 2, 1), argument_error);
  CHECK_THROWS_AS(prop12_construction(3, 2, 3), argument_error);
  CHECK_THROWS_AS(prop12_construction(5, 6, 2), argument_error);  // n > 64
}

TEST_CASE("complement components") {
  const Graph k33 = complete_multipartite({3, 3}).graph();
  const auto comps = complement_components(k33);
  CHECK(comps.size() == 2);
  CHECK(Graph::popcount(comps[0]) == 3);
  const auto one = complement_components(Graph::complete(5));
  CHECK(one.size() == 5);
  const auto whole = complement_components(Graph(4));
  CHECK(whole.size() == 1);
}
