#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erlab/constructions.hpp"
#include "erlab/oracle.hpp"

namespace erlab {

enum class ClaimId {
  THM11_VALUE,
  THM11_FAMILY,
  PROP12_VALUE,
  PROP12_NONEMPTY,
  CONJ13,
  FACT21,
  FACT22,
  FACT23,
  FACT24,
  LEMMA_PARTIAL,
  LEMMA_D,
  PROP_H0MIN,
  NORMALIZATION,
};

const char* to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(std::string_view name);

enum class Verdict { pass, fail, exploratory_match, exploratory_mismatch };
const char* to_string(Verdict v);

struct Counterexample {
  std::string inputs;    // JSON text describing the offending inputs
  std::string graph6;    // offending graph, when one exists
  std::string expected;
  std::string actual;
};

/// Machine-readable outcome of one check. Proven claims may only pass or
/// fail (a fail means an implementation bug and severity() says so); the
/// conjecture check only ever reports exploratory verdicts.
struct VerificationReport {
  ClaimId claim = ClaimId::LEMMA_D;
  std::string params;  // JSON text of the scanned box
  Verdict verdict = Verdict::pass;
  std::vector<Counterexample> counterexamples;
  std::uint64_t seed = 0;
  bool randomized = false;

  bool proven_claim() const { return claim != ClaimId::CONJ13; }
  /// "bug" for a failed proven claim, "finding" for exploratory mismatch,
  /// "none" otherwise.
  std::string severity() const;

  std::string to_json(bool pretty = false) const;
  static VerificationReport from_json(const std::string& text);

  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Shared state for the checkers: the memoized triangle-free catalog, the
/// size caps, and an optional oracle cache.
struct VerifyLimits {
  int max_n_exhaustive = 9;  // K(n,e) / H0(n,e) enumeration cap
};

struct VerifyContext {
  TriangleFreeCatalog catalog;
  OracleLimits oracle;
  ConstructionLimits construction;
  VerifyLimits verify;
  OracleCache* cache = nullptr;
};

/// All members of K(n,e) up to isomorphism: complete multipartite plus a
/// triangle-free graph in one part.
std::vector<Graph> enumerate_K_family(int n, std::uint64_t e,
                                      VerifyContext& ctx);

/// All members of H0(n,e) up to isomorphism, each carrying its construction
/// partition into k-1 parts.
std::vector<PartitionedGraph> enumerate_h0_members(int n, std::uint64_t e,
                                                   VerifyContext& ctx);

// Per-cell checks.
VerificationReport check_thm11_value(int n, std::uint64_t e, int r,
                                     VerifyContext& ctx);
VerificationReport check_thm11_family(int n, std::uint64_t e, int r,
                                      VerifyContext& ctx);
VerificationReport check_conj13(int n, std::uint64_t e, int r,
                                VerifyContext& ctx);
VerificationReport check_h0_min(int n, std::uint64_t e, int r,
                                VerifyContext& ctx);

// Box and randomized checks.
VerificationReport check_fact21(int n_max);
VerificationReport check_fact_counters(int fact, int trials,
                                       std::uint64_t seed);
VerificationReport check_partially_full_convexity(int trials,
                                                  std::uint64_t seed);
VerificationReport check_lemma_d(int a_max, int k_max, int n_max);
VerificationReport check_normalization(int trials, std::uint64_t seed);
VerificationReport check_prop12_value(VerifyContext& ctx);
VerificationReport check_prop12_nonempty(int n_cap, VerifyContext& ctx);

/// Merges per-cell reports of one claim over a box into a single report.
VerificationReport aggregate_reports(ClaimId claim, const std::string& params,
                                     const std::vector<VerificationReport>& cells);

/// Options for the CLI-facing dispatcher; unset fields fall back to each
/// claim's default box.
struct ClaimOptions {
  std::optional<int> n;
  std::optional<std::uint64_t> e;
  std::optional<int> r;
  std::optional<int> n_max;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  std::optional<int> n_cap;
};

VerificationReport run_claim(ClaimId claim, const ClaimOptions& options,
                             VerifyContext& ctx);

}  // namespace erlab
