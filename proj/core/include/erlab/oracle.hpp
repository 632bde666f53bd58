#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "erlab/canonical.hpp"
#include "erlab/graph.hpp"

namespace erlab {

/// Bumped whenever the generation algorithm changes; cache files written by
/// a different version refuse to merge.
inline constexpr int kGeneratorVersion = 1;

/// Extremal forms stored per cell before truncation kicks in.
inline constexpr std::size_t kMaxStoredForms = 10000;

struct OracleLimits {
  int max_n = 10;
};

/// Exact answer for one (n, e, r) cell: the minimum r-clique count over all
/// (n,e)-graphs and the canonical forms of every graph attaining it.
struct OracleCell {
  int n = 0;
  std::uint64_t e = 0;
  int r = 0;
  std::uint64_t g_min = 0;
  std::uint64_t extremal_count = 0;
  std::vector<std::string> extremal_forms;  // canonical graph6, sorted
  bool truncated = false;
};

std::string to_json_line(const OracleCell& cell);
std::optional<OracleCell> cell_from_json_line(const std::string& line);

/// Streams exactly one representative per isomorphism class of n-vertex,
/// e-edge graphs, via canonical edge augmentation.
void enumerate_graphs(
    int n, std::uint64_t e,
    const std::function<void(const Graph&, const CanonicalResult&)>& sink,
    const OracleLimits& limits = {});

/// One enumeration pass answering several r values at once.
std::vector<OracleCell> g_min_cells(int n, std::uint64_t e,
                                    const std::vector<int>& r_list,
                                    const OracleLimits& limits = {});

OracleCell g_min(int n, std::uint64_t e, int r, const OracleLimits& limits = {});

/// Append-only JSON Lines cache: a header line with the generator version
/// and caps, then one cell per line. Corrupted lines are skipped with a log
/// line; a generator-version mismatch refuses to merge. Reloading is
/// last-write-wins per (n, e, r).
class OracleCache {
 public:
  explicit OracleCache(std::string path, const OracleLimits& limits = {});

  std::optional<OracleCell> lookup(int n, std::uint64_t e, int r) const;
  void store(const OracleCell& cell);

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::size_t skipped_lines() const noexcept { return skipped_; }

 private:
  void ensure_header();

  std::string path_;
  OracleLimits limits_;
  std::map<std::tuple<int, std::uint64_t, int>, OracleCell> cells_;
  std::size_t skipped_ = 0;
  bool header_written_ = false;
  mutable std::mutex mu_;
};

struct ScanRequest {
  int n_min = 1;
  int n_max = 1;
  std::vector<int> r_list;
  /// true: e runs over [0, C(n,2)]; false: only the Turan-positive range
  /// (t_{r-1}(n), C(n,2)] for the smallest requested r.
  bool all_e = false;
  int jobs = 1;
};

struct ScanStats {
  std::size_t computed = 0;
  std::size_t replayed = 0;
};

/// Computes every requested cell not already in the cache, appends results,
/// replays cached cells, and streams all of them in deterministic order.
/// The cache may be null (no persistence). Multi-threaded over (n,e) work
/// units with a single writer.
ScanStats scan(const ScanRequest& request, OracleCache* cache,
               const std::function<void(const OracleCell&, bool cached)>& sink,
               const OracleLimits& limits = {});

}  // namespace erlab
