#include "erlab/formulas.hpp"

#include <algorithm>

#include "erlab/checked.hpp"

namespace erlab {

std::uint64_t binom2(std::uint64_t n) {
  return n < 2 ? 0 : checked_mul(n, n - 1) / 2;
}

std::vector<int> turan_part_sizes(int s, int n) {
  if (s < 1) throw argument_error("part count must be >= 1");
  if (n < 0) throw argument_error("vertex count must be >= 0");
  const int q = n / s, rem = n % s;
  std::vector<int> sizes(s);
  for (int i = 0; i < s; ++i) sizes[i] = q + (i < rem ? 1 : 0);
  return sizes;
}

std::uint64_t complete_multipartite_edges(const std::vector<int>& sizes) {
  std::uint64_t n = 0, squares = 0;
  for (int a : sizes) {
    if (a < 0) throw argument_error("part sizes must be >= 0");
    n = checked_add(n, static_cast<std::uint64_t>(a));
    squares = checked_add(squares, checked_mul(a, a));
  }
  return (checked_mul(n, n) - squares) / 2;
}

std::uint64_t turan_edges(int s, int n) {
  return complete_multipartite_edges(turan_part_sizes(s, n));
}

int chromatic_threshold(int n, std::uint64_t e) {
  if (n < 1) throw argument_error("vertex count must be >= 1");
  if (e > binom2(static_cast<std::uint64_t>(n)))
    throw argument_error("edge count " + std::to_string(e) +
                         " exceeds C(n,2)");
  int s = 1;
  while (turan_edges(s, n) < e) ++s;
  return s;
}

int smallest_part(int n, std::uint64_t e, int k) {
  if (k < 2) throw argument_error("smallest_part requires k >= 2");
  if (e < 1) throw argument_error("smallest_part requires e >= 1");
  for (int a = 1; a <= n; ++a) {
    const std::uint64_t f =
        checked_add(checked_mul(a, n - a), turan_edges(k - 1, n - a));
    if (f >= e) return a;
  }
  throw argument_error("no part size reaches e; is k = chromatic_threshold?");
}

std::uint64_t elementary_symmetric(const std::vector<int>& values, int take,
                                   int r) {
  if (r < 0) return 0;
  take = std::min<int>(take, static_cast<int>(values.size()));
  if (r > take) return 0;
  // Coefficients of prod (1 + a_i x) up to degree r.
  std::vector<std::uint64_t> coeff(r + 1, 0);
  coeff[0] = 1;
  for (int i = 0; i < take; ++i) {
    const std::uint64_t a = static_cast<std::uint64_t>(values[i]);
    for (int d = std::min(r, i + 1); d >= 1; --d)
      coeff[d] = checked_add(coeff[d], checked_mul(coeff[d - 1], a));
  }
  return coeff[r];
}

ExtremalProfile profile(int n, std::uint64_t e, int r) {
  if (n < 1 || n > Graph::kMaxVertices)
    throw argument_error("vertex count must be in [1, 64]");
  if (r < 3) throw argument_error("profile requires r >= 3");
  if (e > binom2(static_cast<std::uint64_t>(n)))
    throw argument_error("edge count exceeds C(n,2)");

  ExtremalProfile p;
  p.n = n;
  p.e = e;
  p.r = r;
  if (e == 0) {
    // t_0 is never evaluated; the e = 0 cell short-circuits to one part.
    p.k = 1;
    p.a_star = {n};
    p.m_star = 0;
    p.h_star = 0;
    return p;
  }
  p.k = chromatic_threshold(n, e);
  const int a_k = smallest_part(n, e, p.k);
  p.a_star = turan_part_sizes(p.k - 1, n - a_k);
  p.a_star.push_back(a_k);

  const std::uint64_t complete_edges = complete_multipartite_edges(p.a_star);
  if (complete_edges < e)
    throw arithmetic_overflow_error("m* would be negative");
  p.m_star = complete_edges - e;

  const std::uint64_t attained = elementary_symmetric(p.a_star, p.k, r);
  const std::uint64_t removed = checked_mul(
      p.m_star, elementary_symmetric(p.a_star, p.k - 2, r - 2));
  p.h_star = checked_sub(attained, removed);
  return p;
}

bool lemma_d_holds(int a, int k, int n) {
  if (a < 1 || k < 2 || n < a * k)
    throw argument_error("lemma_d_holds requires a >= 1, k >= 2, n >= ak");
  const std::uint64_t lhs =
      checked_add(checked_mul(a, n - a), turan_edges(k - 1, n - a));
  const std::uint64_t rhs = checked_add(
      checked_mul(a - 1, n - a + 1), turan_edges(k - 1, n - a + 1));
  return lhs > rhs;
}

}  // namespace erlab
