#include "doctest.h"

#include "erlab/constructions.hpp"
#include "erlab/formulas.hpp"

using namespace erlab;

TEST_CASE("turan edge counts") {
  CHECK(turan_edges(2, 6) == 9);
  CHECK(turan_edges(3, 7) == 16);
  CHECK(turan_edges(3, 8) == 21);
  CHECK(turan_edges(1, 9) == 0);
  CHECK(turan_edges(4, 8) == 24);
  // n < s: empty parts collapse to the complete graph.
  CHECK(turan_edges(7, 4) == 6);
  CHECK(turan_edges(5, 0) == 0);
  // Consistency against the explicit part sizes.
  for (int s = 1; s <= 6; ++s)
    for (int n = 0; n <= 20; ++n)
      CHECK(turan_edges(s, n) ==
            complete_multipartite_edges(turan_part_sizes(s, n)));
}

TEST_CASE("chromatic threshold") {
  CHECK(chromatic_threshold(6, 10) == 3);
  CHECK(chromatic_threshold(9, 0) == 1);
  CHECK(chromatic_threshold(8, 22) == 4);
  CHECK(chromatic_threshold(5, 10) == 5);
  CHECK_THROWS_AS(chromatic_threshold(5, 11), argument_error);
  // By definition: t_{k-1}(n) < e <= t_k(n) for every positive e.
  for (int n = 2; n <= 14; ++n)
    for (std::uint64_t e = 1; e <= binom2(n); ++e) {
      const int k = chromatic_threshold(n, e);
      CHECK(turan_edges(k, n) >= e);
      CHECK(turan_edges(k - 1, n) < e);
    }
}

TEST_CASE("smallest part size") {
  CHECK(smallest_part(8, 22, 4) == 1);
  CHECK(smallest_part(14, 70, 4) == 2);
  // At the Turan count itself the balanced graph is the witness.
  for (int n = 4; n <= 16; ++n)
    for (int k = 2; k <= n; ++k)
      CHECK(smallest_part(n, turan_edges(k, n), k) == n / k);
}

TEST_CASE("profile on pinned cells") {
  const ExtremalProfile p = profile(8, 22, 4);
  CHECK(p.k == 4);
  CHECK(p.a_star == std::vector<int>{3, 2, 2, 1});
  CHECK(p.m_star == 1);
  CHECK(p.h_star == 6);
  CHECK(profile(8, 22, 3).h_star == 23);

  const ExtremalProfile q = profile(14, 70, 4);
  CHECK(q.k == 4);
  CHECK(q.a_star == std::vector<int>{4, 4, 4, 2});
  CHECK(q.m_star == 2);
  CHECK(q.h_star == 96);

  const ExtremalProfile zero = profile(9, 0, 3);
  CHECK(zero.k == 1);
  CHECK(zero.a_star == std::vector<int>{9});
  CHECK(zero.m_star == 0);
  CHECK(zero.h_star == 0);
}

TEST_CASE("profile invariants across a wide box") {
  for (int n = 2; n <= 40; ++n) {
    for (std::uint64_t e = 1; e <= binom2(n); ++e) {
      const ExtremalProfile p = profile(n, e, 3);
      const int k = p.k;
      REQUIRE(k >= 2);
      int sum = 0;
      for (int a : p.a_star) sum += a;
      CHECK(sum == n);
      // Balanced non-increasing prefix, small last part.
      for (int i = 0; i + 1 < k - 1; ++i)
        CHECK(p.a_star[i] >= p.a_star[i + 1]);
      if (k >= 2) {
        CHECK(p.a_star[k - 2] >= p.a_star[0] - 1);
        CHECK(p.a_star[k - 1] <= p.a_star[k - 2]);
        CHECK(p.m_star <=
              static_cast<std::uint64_t>(p.a_star[k - 2] - p.a_star[k - 1]));
      }
    }
  }
}

TEST_CASE("h* is monotone in e and vanishes below the Turan threshold") {
  for (int n = 3; n <= 12; ++n) {
    for (int r = 3; r <= 5; ++r) {
      std::uint64_t previous = 0;
      for (std::uint64_t e = 1; e <= binom2(n); ++e) {
        const std::uint64_t h = profile(n, e, r).h_star;
        CHECK(h >= previous);
        previous = h;
        if (e <= turan_edges(r - 1, n)) CHECK(h == 0);
      }
    }
  }
}

TEST_CASE("strict monotonicity of the part-size threshold function") {
  CHECK(lemma_d_holds(2, 3, 10));
  CHECK(lemma_d_holds(1, 2, 2));
  CHECK(lemma_d_holds(3, 4, 12));
  CHECK_THROWS_AS(lemma_d_holds(0, 3, 10), argument_error);
  CHECK_THROWS_AS(lemma_d_holds(2, 3, 5), argument_error);
}

TEST_CASE("elementary symmetric sums") {
  const std::vector<int> a{3, 2, 2, 1};
  CHECK(elementary_symmetric(a, 4, 0) == 1);
  CHECK(elementary_symmetric(a, 4, 1) == 8);
  CHECK(elementary_symmetric(a, 4, 2) == 23);
  CHECK(elementary_symmetric(a, 4, 4) == 12);
  CHECK(elementary_symmetric(a, 4, 5) == 0);
  CHECK(elementary_symmetric(a, 2, 2) == 6);
  CHECK(elementary_symmetric(a, 0, 0) == 1);
  CHECK(elementary_symmetric(a, 4, -1) == 0);
}
