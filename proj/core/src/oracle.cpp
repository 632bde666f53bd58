#include "erlab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "json.hpp"

#include "erlab/checked.hpp"
#include "erlab/enumeration.hpp"
#include "erlab/formulas.hpp"

namespace erlab {

using nlohmann::json;

std::string to_json_line(const OracleCell& cell) {
  json j;
  j["n"] = cell.n;
  j["e"] = cell.e;
  j["r"] = cell.r;
  j["g_min"] = cell.g_min;
  j["extremal_count"] = cell.extremal_count;
  j["truncated"] = cell.truncated;
  j["extremal_forms"] = cell.extremal_forms;
  return j.dump();
}

std::optional<OracleCell> cell_from_json_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    OracleCell cell;
    cell.n = j.at("n").get<int>();
    cell.e = j.at("e").get<std::uint64_t>();
    cell.r = j.at("r").get<int>();
    cell.g_min = j.at("g_min").get<std::uint64_t>();
    cell.extremal_count = j.at("extremal_count").get<std::uint64_t>();
    cell.truncated = j.at("truncated").get<bool>();
    cell.extremal_forms =
        j.at("extremal_forms").get<std::vector<std::string>>();
    return cell;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void enumerate_graphs(
    int n, std::uint64_t e,
    const std::function<void(const Graph&, const CanonicalResult&)>& sink,
    const OracleLimits& limits) {
  if (n < 1) throw argument_error("vertex count must be >= 1");
  if (n > limits.max_n)
    throw capacity_error("n=" + std::to_string(n) +
                         " exceeds max_n_oracle=" + std::to_string(limits.max_n));
  const std::uint64_t full = binom2(n);
  if (e > full) throw argument_error("edge count exceeds C(n,2)");

  // Complementation halves the work in the dense range: classes with e
  // edges correspond one-to-one to classes with C(n,2)-e edges.
  const bool complemented = 2 * e > full;
  const std::uint64_t target = complemented ? full - e : e;
  enumerate_isofree(
      n, static_cast<int>(target), [](const Graph&, int, int) { return true; },
      [&](const Graph& g, int level, const CanonicalResult& canon) {
        if (level == static_cast<int>(target)) {
          if (complemented) {
            const Graph co = complement(g);
            sink(co, canonicalize(co));
          } else {
            sink(g, canon);
          }
          return false;  // edge budget reached
        }
        return true;
      });
}

std::vector<OracleCell> g_min_cells(int n, std::uint64_t e,
                                    const std::vector<int>& r_list,
                                    const OracleLimits& limits) {
  if (r_list.empty()) throw argument_error("need at least one r");
  struct Accumulator {
    bool any = false;
    std::uint64_t best = 0;
    std::uint64_t count = 0;
    std::vector<std::string> forms;
    bool truncated = false;
  };
  std::vector<Accumulator> acc(r_list.size());

  enumerate_graphs(
      n, e,
      [&](const Graph& g, const CanonicalResult& canon) {
        for (std::size_t i = 0; i < r_list.size(); ++i) {
          const std::uint64_t c = count_cliques(g, r_list[i]);
          Accumulator& a = acc[i];
          if (!a.any || c < a.best) {
            a.any = true;
            a.best = c;
            a.count = 1;
            a.forms.clear();
            a.truncated = false;
            a.forms.push_back(canon.form);
          } else if (c == a.best) {
            ++a.count;
            if (a.forms.size() < kMaxStoredForms)
              a.forms.push_back(canon.form);
            else
              a.truncated = true;
          }
        }
      },
      limits);

  std::vector<OracleCell> out;
  out.reserve(r_list.size());
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    OracleCell cell;
    cell.n = n;
    cell.e = e;
    cell.r = r_list[i];
    cell.g_min = acc[i].best;
    cell.extremal_count = acc[i].count;
    std::sort(acc[i].forms.begin(), acc[i].forms.end());
    cell.extremal_forms = std::move(acc[i].forms);
    cell.truncated = acc[i].truncated;
    out.push_back(std::move(cell));
  }
  return out;
}

OracleCell g_min(int n, std::uint64_t e, int r, const OracleLimits& limits) {
  return g_min_cells(n, e, {r}, limits).front();
}

OracleCache::OracleCache(std::string path, const OracleLimits& limits)
    : path_(std::move(path)), limits_(limits) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  if (!in) throw cache_error("cannot open cache file " + path_);
  std::string line;
  std::size_t line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (!have_header) {
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() ||
          !j.contains("erlab_oracle_cache"))
        throw cache_error("cache file " + path_ + " has no valid header");
      const int version = j.value("generator_version", -1);
      if (version != kGeneratorVersion)
        throw cache_error("cache generator_version " +
                          std::to_string(version) + " does not match " +
                          std::to_string(kGeneratorVersion) +
                          "; refusing to merge");
      have_header = true;
      header_written_ = true;
      continue;
    }
    std::optional<OracleCell> cell = cell_from_json_line(line);
    if (!cell) {
      std::cerr << "erlab: cache " << path_ << ": skipping corrupted line "
                << line_number << "\n";
      ++skipped_;
      continue;
    }
    cells_[{cell->n, cell->e, cell->r}] = std::move(*cell);
  }
}

void OracleCache::ensure_header() {
  if (header_written_) return;
  json j;
  j["erlab_oracle_cache"] = 1;
  j["generator_version"] = kGeneratorVersion;
  j["max_n"] = limits_.max_n;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw cache_error("cannot write cache file " + path_);
  out << j.dump() << "\n";
  header_written_ = true;
}

std::optional<OracleCell> OracleCache::lookup(int n, std::uint64_t e,
                                              int r) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cells_.find({n, e, r});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

void OracleCache::store(const OracleCell& cell) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure_header();
  std::ofstream out(path_, std::ios::app);
  if (!out) throw cache_error("cannot append to cache file " + path_);
  out << to_json_line(cell) << "\n";
  out.flush();
  cells_[{cell.n, cell.e, cell.r}] = cell;
}

namespace {

struct ScanUnit {
  int n;
  std::uint64_t e;
  std::vector<int> missing_r;                 // to compute
  std::vector<std::pair<int, bool>> emit_r;   // (r, cached) in request order
  std::map<int, OracleCell> cached;
};

}  // namespace

ScanStats scan(const ScanRequest& request, OracleCache* cache,
               const std::function<void(const OracleCell&, bool cached)>& sink,
               const OracleLimits& limits) {
  if (request.n_min < 1 || request.n_max < request.n_min)
    throw argument_error("bad n range");
  if (request.r_list.empty()) throw argument_error("need at least one r");
  if (request.n_max > limits.max_n)
    throw capacity_error("n=" + std::to_string(request.n_max) +
                         " exceeds max_n_oracle=" + std::to_string(limits.max_n));

  int min_r = request.r_list.front();
  for (int r : request.r_list) min_r = std::min(min_r, r);

  std::vector<ScanUnit> units;
  for (int n = request.n_min; n <= request.n_max; ++n) {
    const std::uint64_t e_max = binom2(n);
    const std::uint64_t e_min =
        request.all_e ? 0
                      : (min_r >= 2 ? turan_edges(min_r - 1, n) + 1 : 0);
    for (std::uint64_t e = e_min; e <= e_max; ++e) {
      ScanUnit unit;
      unit.n = n;
      unit.e = e;
      for (int r : request.r_list) {
        std::optional<OracleCell> hit =
            cache ? cache->lookup(n, e, r) : std::nullopt;
        if (hit) {
          unit.cached.emplace(r, std::move(*hit));
          unit.emit_r.emplace_back(r, true);
        } else {
          unit.missing_r.push_back(r);
          unit.emit_r.emplace_back(r, false);
        }
      }
      units.push_back(std::move(unit));
    }
  }

  ScanStats stats;
  auto emit_unit = [&](const ScanUnit& unit,
                       std::vector<OracleCell>&& computed) {
    std::map<int, OracleCell> fresh;
    for (OracleCell& cell : computed) {
      if (cache) cache->store(cell);
      fresh.emplace(cell.r, std::move(cell));
    }
    for (const auto& [r, cached] : unit.emit_r) {
      if (cached) {
        sink(unit.cached.at(r), true);
        ++stats.replayed;
      } else {
        sink(fresh.at(r), false);
        ++stats.computed;
      }
    }
  };

  const int jobs = std::max(1, request.jobs);
  if (jobs == 1) {
    for (ScanUnit& unit : units) {
      std::vector<OracleCell> computed;
      if (!unit.missing_r.empty())
        computed = g_min_cells(unit.n, unit.e, unit.missing_r, limits);
      emit_unit(unit, std::move(computed));
    }
    return stats;
  }

  // Workers compute cells; the calling thread is the single writer and
  // emits units in order.
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, std::vector<OracleCell>> done;
  std::atomic<std::size_t> next_claim{0};
  std::exception_ptr failure;

  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next_claim.fetch_add(1);
      if (idx >= units.size()) return;
      std::vector<OracleCell> computed;
      try {
        if (!units[idx].missing_r.empty())
          computed =
              g_min_cells(units[idx].n, units[idx].e, units[idx].missing_r,
                          limits);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      done.emplace(idx, std::move(computed));
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const std::size_t thread_count =
      std::min(static_cast<std::size_t>(jobs), std::max<std::size_t>(units.size(), 1));
  pool.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);

  for (std::size_t idx = 0; idx < units.size(); ++idx) {
    std::vector<OracleCell> computed;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return failure || done.count(idx); });
      if (failure) break;
      computed = std::move(done.at(idx));
      done.erase(idx);
    }
    emit_unit(units[idx], std::move(computed));
  }

  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return stats;
}

}  // namespace erlab
