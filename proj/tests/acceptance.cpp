// Acceptance suite: every release gate runs here, one line per criterion.
// Tolerances are exact equalities throughout; any FAIL on criteria 1-7 (and
// the completeness half of 8) is an implementation bug.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"
#include "erlab/formulas.hpp"
#include "erlab/graph6.hpp"
#include "erlab/oracle.hpp"
#include "erlab/verify.hpp"

using namespace erlab;

namespace {

struct Harness {
  int failures = 0;

  template <typename Fn>
  void criterion(int id, const std::string& title, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[criterion %d] %s ... %s (%.1fs%s%s)\n", id, title.c_str(),
                ok ? "PASS" : "FAIL", seconds, detail.empty() ? "" : "; ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::string cache_path() {
  return (std::filesystem::temp_directory_path() /
          ("erlab_acceptance_cache_" + std::to_string(::getpid()) + ".jsonl"))
      .string();
}

}  // namespace

int main() {
  Harness h;
  VerifyContext ctx;
  const std::string cache_file = cache_path();
  std::filesystem::remove(cache_file);
  OracleCache cache(cache_file);
  ctx.cache = &cache;

  // 1. The construction attains the closed-form prediction on every cell.
  h.criterion(1, "predictor-construction agreement (n<=12, r in {3,4,5})",
              [&](std::string& detail) {
                std::size_t cells = 0;
                for (int n = 3; n <= 12; ++n)
                  for (std::uint64_t e = 1; e <= binom2(n); ++e) {
                    const FamilyMember built = build_h_star(n, e);
                    for (int r = 3; r <= 5; ++r) {
                      ++cells;
                      if (count_cliques(built.graph.graph(), r) !=
                          profile(n, e, r).h_star) {
                        detail = "mismatch at n=" + std::to_string(n) +
                                 " e=" + std::to_string(e) +
                                 " r=" + std::to_string(r);
                        return false;
                      }
                    }
                  }
                detail = std::to_string(cells) + " cells exact";
                return true;
              });

  // 2. Every family member carries the predicted count.
  h.criterion(
      2, "family constancy (H1*/H2* for n<=10, plus the (14,70,4) member)",
      [&](std::string& detail) {
        std::size_t members_checked = 0;
        for (int n = 3; n <= 10; ++n) {
          for (std::uint64_t e = 1; e <= binom2(n); ++e) {
            for (const FamilyMember& m :
                 enumerate_h1_star(n, e, ctx.catalog, ctx.construction))
              for (int r = 3; r <= 5; ++r) {
                ++members_checked;
                if (count_cliques(m.graph.graph(), r) !=
                    profile(n, e, r).h_star) {
                  detail = "H1* mismatch at n=" + std::to_string(n) +
                           " e=" + std::to_string(e) + " r=" + std::to_string(r);
                  return false;
                }
              }
            for (const FamilyMember& m :
                 enumerate_h2_star(n, e, ctx.catalog, ctx.construction))
              for (int r = 4; r <= 5; ++r) {
                if (e <= turan_edges(r - 1, n)) continue;
                ++members_checked;
                if (count_cliques(m.graph.graph(), r) !=
                    profile(n, e, r).h_star) {
                  detail = "H2* mismatch at n=" + std::to_string(n) +
                           " e=" + std::to_string(e) + " r=" + std::to_string(r);
                  return false;
                }
              }
          }
        }
        if (profile(14, 70, 4).h_star != 96) {
          detail = "h*_4(14,70) != 96";
          return false;
        }
        for (const FamilyMember& m :
             enumerate_h2_star(14, 70, ctx.catalog, ctx.construction)) {
          ++members_checked;
          if (count_cliques(m.graph.graph(), 4) != 96) {
            detail = "H2*(14,70) member misses 96";
            return false;
          }
        }
        detail = std::to_string(members_checked) + " member/r pairs exact";
        return true;
      });

  // 3. Oracle ground truth across the full n<=8 box (shared via the cache).
  h.criterion(
      3, "oracle ground truth (Rademacher, Turan threshold, g <= h*)",
      [&](std::string& detail) {
        ScanRequest req;
        req.n_min = 2;
        req.n_max = 8;
        req.r_list = {3, 4};
        req.all_e = true;
        std::map<std::tuple<int, std::uint64_t, int>, OracleCell> cells;
        scan(req, &cache,
             [&](const OracleCell& cell, bool) {
               cells[{cell.n, cell.e, cell.r}] = cell;
             },
             ctx.oracle);

        for (int n = 4; n <= 8; ++n) {
          const OracleCell& rad = cells.at({n, turan_edges(2, n) + 1, 3});
          if (rad.g_min != static_cast<std::uint64_t>(n / 2)) {
            detail = "Rademacher fails at n=" + std::to_string(n);
            return false;
          }
        }
        for (const auto& [key, cell] : cells) {
          const auto [n, e, r] = key;
          if ((cell.g_min == 0) != (e <= turan_edges(r - 1, n))) {
            detail = "Turan threshold fails at n=" + std::to_string(n) +
                     " e=" + std::to_string(e) + " r=" + std::to_string(r);
            return false;
          }
          if (e >= 1 && cell.g_min > profile(n, e, r).h_star) {
            detail = "g_min above h* at n=" + std::to_string(n) +
                     " e=" + std::to_string(e) + " r=" + std::to_string(r);
            return false;
          }
        }
        detail = std::to_string(cells.size()) + " cells";
        return true;
      });

  // 4. Theorem reproduction over K(n,e).
  h.criterion(
      4, "theorem desk-scale reproduction (value n<=8 r in {3,4}; family r=4)",
      [&](std::string& detail) {
        std::size_t cells = 0;
        for (int n = 3; n <= 8; ++n)
          for (std::uint64_t e = 1; e <= binom2(n); ++e)
            for (int r : {3, 4}) {
              ++cells;
              if (check_thm11_value(n, e, r, ctx).verdict != Verdict::pass) {
                detail = "value fails at n=" + std::to_string(n) +
                         " e=" + std::to_string(e) + " r=" + std::to_string(r);
                return false;
              }
            }
        for (int n = 4; n <= 8; ++n)
          for (std::uint64_t e = turan_edges(3, n) + 1; e <= binom2(n); ++e) {
            ++cells;
            if (check_thm11_family(n, e, 4, ctx).verdict != Verdict::pass) {
              detail = "family fails at n=" + std::to_string(n) +
                       " e=" + std::to_string(e);
              return false;
            }
          }
        detail = std::to_string(cells) + " cells";
        return true;
      });

  // 5. H0 minimizers are exactly H1*, and Steps 1-4 land them on H*.
  h.criterion(5, "H0 minimizer reproduction incl. normalization (n<=8, r=4)",
              [&](std::string& detail) {
                std::size_t cells = 0;
                for (int n = 4; n <= 8; ++n)
                  for (std::uint64_t e = turan_edges(3, n) + 1; e <= binom2(n);
                       ++e) {
                    ++cells;
                    if (check_h0_min(n, e, 4, ctx).verdict != Verdict::pass) {
                      detail = "fails at n=" + std::to_string(n) +
                               " e=" + std::to_string(e);
                      return false;
                    }
                  }
                detail = std::to_string(cells) + " cells";
                return true;
              });

  // 6. The explicit split-star cell behaves as predicted.
  h.criterion(6, "split-star nonemptiness at (14,70)",
              [&](std::string& detail) {
                const Prop12Result r = prop12_construction(3, 2, 2);
                if (r.n != 14 || r.e != 70) {
                  detail = "construction returned the wrong cell";
                  return false;
                }
                if (!is_member_h2_star(r.graph, 14, 70)) {
                  detail = "not recognized by H2* membership";
                  return false;
                }
                if (is_member_h1_star(r.graph, 14, 70)) {
                  detail = "unexpectedly inside H1*";
                  return false;
                }
                const ExtremalProfile p = profile(14, 70, 4);
                if (p.k != 4 || p.a_star != std::vector<int>{4, 4, 4, 2} ||
                    p.m_star != 2) {
                  detail = "profile(14,70,4) mismatch";
                  return false;
                }
                return true;
              });

  // 7. Identity suites at full trial counts.
  h.criterion(
      7, "identity suites (Facts 1000 trials each, convexity 500, full box)",
      [&](std::string& detail) {
        for (int fact : {2, 3, 4})
          if (check_fact_counters(fact, 1000, 20260809).verdict !=
              Verdict::pass) {
            detail = "structured counter " + std::to_string(fact) + " fails";
            return false;
          }
        if (check_partially_full_convexity(500, 20260809).verdict !=
            Verdict::pass) {
          detail = "convexity identity fails";
          return false;
        }
        if (check_lemma_d(8, 8, 60).verdict != Verdict::pass) {
          detail = "threshold monotonicity fails on the box";
          return false;
        }
        return true;
      });

  // 8. Conjecture exploration: a complete report, and the families embed in
  // the extremal set whenever the oracle meets the prediction.
  h.criterion(
      8, "conjecture exploration is complete (n<=8, r=4; not a truth gate)",
      [&](std::string& detail) {
        std::size_t cells = 0, matches = 0;
        for (int n = 4; n <= 8; ++n)
          for (std::uint64_t e = turan_edges(3, n) + 1; e <= binom2(n); ++e) {
            const VerificationReport report = check_conj13(n, e, 4, ctx);
            ++cells;
            if (report.verdict == Verdict::exploratory_match) ++matches;
            std::istringstream params(report.params);
            std::string text = report.params;
            const bool subset_ok =
                text.find("\"families_subset_of_extremal\":true") !=
                std::string::npos;
            const bool value_match =
                text.find("\"g_min_below_h_star\":false") != std::string::npos;
            if (value_match && !subset_ok) {
              detail = "family not inside the extremal set at n=" +
                       std::to_string(n) + " e=" + std::to_string(e);
              return false;
            }
          }
        detail = std::to_string(cells) + " cells, " + std::to_string(matches) +
                 " exploratory matches";
        return true;
      });

  // 9. Scope note: the asymptotic headline results are not desk-reproducible;
  // criteria 1-8 are the exhaustive small-n and exact-identity substitute.
  h.criterion(9, "asymptotic results substituted by exact small-n checks",
              [&](std::string& detail) {
                detail = "statement of scope";
                return true;
              });

  std::filesystem::remove(cache_file);
  if (h.failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", h.failures);
  return 1;
}
