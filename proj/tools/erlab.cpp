// erlab command line front door: profile queries, family constructions,
// clique counting, oracle runs, claim verification, and report emission.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "erlab/canonical.hpp"
#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"
#include "erlab/formulas.hpp"
#include "erlab/graph6.hpp"
#include "erlab/oracle.hpp"
#include "erlab/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOptions {
  std::string output_format = "json";
  bool no_timestamp = false;
  std::uint64_t seed = 0;
  std::string cache_path;
  int max_n_oracle = 10;
  int max_block = 12;
  int jobs = 1;
};

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
  return buf;
}

void stamp(json& j, const GlobalOptions& opts) {
  if (!opts.no_timestamp) j["timestamp"] = iso_timestamp();
}

void emit(const json& j, const GlobalOptions&) { std::cout << j.dump() << "\n"; }

json witness_to_json(const erlab::FamilyWitness& w) {
  json j;
  j["part_sizes"] = w.part_sizes;
  if (w.block_part >= 0) {
    j["block_part"] = w.block_part;
    j["block_graph6"] = w.block_graph6;
  }
  if (!w.removed_edges.empty()) {
    json edges = json::array();
    for (const auto& [u, v] : w.removed_edges) edges.push_back({u, v});
    j["removed_edges"] = std::move(edges);
  }
  return j;
}

json member_to_json(const erlab::FamilyMember& m) {
  json j;
  j["graph6"] = erlab::graph6_encode(m.graph.graph());
  j["family"] = erlab::to_string(m.tag);
  j["witness"] = witness_to_json(m.witness);
  return j;
}

std::vector<erlab::Graph> read_input_graphs(const std::string& graph_arg,
                                            bool use_stdin) {
  std::vector<erlab::Graph> graphs;
  if (!graph_arg.empty()) graphs.push_back(erlab::graph6_decode(graph_arg));
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      graphs.push_back(erlab::graph6_decode(line));
    }
  }
  if (graphs.empty())
    throw erlab::argument_error("no input graphs; pass --graph or --stdin");
  return graphs;
}

int run_profile(const GlobalOptions& opts, int n, std::uint64_t e, int r) {
  const erlab::ExtremalProfile p = erlab::profile(n, e, r);
  json j;
  j["n"] = p.n;
  j["e"] = p.e;
  j["r"] = p.r;
  j["k"] = p.k;
  j["a_star"] = p.a_star;
  j["m_star"] = p.m_star;
  j["h_star"] = p.h_star;
  stamp(j, opts);
  if (opts.output_format == "text") {
    std::cout << "k=" << p.k << " a*=(";
    for (std::size_t i = 0; i < p.a_star.size(); ++i)
      std::cout << (i ? "," : "") << p.a_star[i];
    std::cout << ") m*=" << p.m_star << " h*_" << r << "=" << p.h_star << "\n";
  } else {
    emit(j, opts);
  }
  return 0;
}

int run_construct(const GlobalOptions& opts, const std::string& family, int n,
                  std::uint64_t e, bool all) {
  erlab::ConstructionLimits limits;
  limits.max_block = opts.max_block;
  std::vector<erlab::FamilyMember> members;
  if (family == "hstar") {
    members.push_back(erlab::build_h_star(n, e));
  } else {
    erlab::TriangleFreeCatalog catalog;
    members = family == "h1" ? erlab::enumerate_h1_star(n, e, catalog, limits)
                             : erlab::enumerate_h2_star(n, e, catalog, limits);
    if (!all && members.size() > 1)
      members.erase(members.begin() + 1, members.end());
  }
  if (opts.output_format == "json") {
    json j;
    j["family"] = family;
    j["n"] = n;
    j["e"] = e;
    j["count"] = members.size();
    json list = json::array();
    for (const erlab::FamilyMember& m : members) list.push_back(member_to_json(m));
    j["members"] = std::move(list);
    stamp(j, opts);
    emit(j, opts);
  } else {
    for (const erlab::FamilyMember& m : members)
      std::cout << erlab::graph6_encode(m.graph.graph()) << "\n";
  }
  return 0;
}

int run_count(const GlobalOptions& opts, int r, const std::string& graph_arg,
              bool use_stdin) {
  for (const erlab::Graph& g : read_input_graphs(graph_arg, use_stdin)) {
    const std::uint64_t c = erlab::count_cliques(g, r);
    if (opts.output_format == "text") {
      std::cout << erlab::graph6_encode(g) << "\t" << c << "\n";
    } else {
      json j;
      j["graph6"] = erlab::graph6_encode(g);
      j["r"] = r;
      j["count"] = c;
      emit(j, opts);
    }
  }
  return 0;
}

int run_normalize(const GlobalOptions& opts) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string g6, labels;
    in >> g6 >> labels;
    if (labels.empty())
      throw erlab::argument_error(
          "expected '<graph6> <comma-separated 1-based part labels>'");
    erlab::Graph g = erlab::graph6_decode(g6);
    std::vector<int> part_of;
    std::istringstream ls(labels);
    std::string token;
    while (std::getline(ls, token, ',')) part_of.push_back(std::stoi(token));
    const erlab::PartitionedGraph normalized =
        erlab::normalize_h0(erlab::PartitionedGraph(g, part_of));
    if (opts.output_format == "text") {
      std::cout << erlab::graph6_encode(normalized.graph());
      for (int s : normalized.part_sizes()) std::cout << " " << s;
      std::cout << "\n";
    } else {
      json j;
      j["graph6"] = erlab::graph6_encode(normalized.graph());
      j["part_sizes"] = normalized.part_sizes();
      emit(j, opts);
    }
  }
  return 0;
}

json cell_to_json(const erlab::OracleCell& cell, bool with_forms) {
  json j;
  j["n"] = cell.n;
  j["e"] = cell.e;
  j["r"] = cell.r;
  j["g_min"] = cell.g_min;
  j["extremal_count"] = cell.extremal_count;
  j["truncated"] = cell.truncated;
  if (with_forms) j["extremal_forms"] = cell.extremal_forms;
  return j;
}

std::unique_ptr<erlab::OracleCache> open_cache(const GlobalOptions& opts,
                                               const erlab::OracleLimits& lim) {
  if (opts.cache_path.empty()) return nullptr;
  return std::make_unique<erlab::OracleCache>(opts.cache_path, lim);
}

int run_oracle(const GlobalOptions& opts, int n, std::uint64_t e, int r,
               bool extremal) {
  erlab::OracleLimits limits;
  limits.max_n = opts.max_n_oracle;
  std::unique_ptr<erlab::OracleCache> cache = open_cache(opts, limits);
  erlab::OracleCell cell;
  if (cache) {
    if (auto hit = cache->lookup(n, e, r)) {
      cell = *hit;
    } else {
      cell = erlab::g_min(n, e, r, limits);
      cache->store(cell);
    }
  } else {
    cell = erlab::g_min(n, e, r, limits);
  }
  if (opts.output_format == "text") {
    std::cout << "g_" << r << "(" << n << "," << e << ") = " << cell.g_min
              << "  extremal classes: " << cell.extremal_count << "\n";
    if (extremal)
      for (const std::string& form : cell.extremal_forms)
        std::cout << form << "\n";
  } else {
    json j = cell_to_json(cell, extremal);
    stamp(j, opts);
    emit(j, opts);
  }
  return 0;
}

int run_scan(const GlobalOptions& opts, int n_min, int n_max, int r,
             bool all_e) {
  erlab::OracleLimits limits;
  limits.max_n = opts.max_n_oracle;
  std::unique_ptr<erlab::OracleCache> cache = open_cache(opts, limits);
  erlab::ScanRequest req;
  req.n_min = n_min;
  req.n_max = n_max;
  req.r_list = {r};
  req.all_e = all_e;
  req.jobs = opts.jobs;
  erlab::ScanStats stats = erlab::scan(
      req, cache.get(),
      [&](const erlab::OracleCell& cell, bool cached) {
        if (opts.output_format == "text") {
          std::cout << cell.n << " " << cell.e << " " << cell.r << " "
                    << cell.g_min << " " << cell.extremal_count
                    << (cached ? " cached" : "") << "\n";
        } else {
          json j = cell_to_json(cell, false);
          j["cached"] = cached;
          emit(j, opts);
        }
      },
      limits);
  if (opts.output_format != "text") {
    json j;
    j["computed"] = stats.computed;
    j["replayed"] = stats.replayed;
    stamp(j, opts);
    emit(j, opts);
  }
  return 0;
}

int run_verify(const GlobalOptions& opts, const std::string& claim_name,
               const erlab::ClaimOptions& claim_opts) {
  const std::optional<erlab::ClaimId> claim =
      erlab::claim_from_string(claim_name);
  if (!claim)
    throw erlab::argument_error("unknown claim id: " + claim_name);
  erlab::VerifyContext ctx;
  ctx.oracle.max_n = opts.max_n_oracle;
  ctx.construction.max_block = opts.max_block;
  std::unique_ptr<erlab::OracleCache> cache = open_cache(opts, ctx.oracle);
  ctx.cache = cache.get();

  const erlab::VerificationReport report =
      erlab::run_claim(*claim, claim_opts, ctx);
  if (opts.output_format == "csv") {
    std::cout << erlab::VerificationReport::csv_header() << "\n"
              << report.to_csv_row() << "\n";
  } else if (opts.output_format == "text") {
    std::cout << erlab::to_string(report.claim) << ": "
              << erlab::to_string(report.verdict) << " (severity "
              << report.severity() << ", " << report.counterexamples.size()
              << " counterexamples)\n";
  } else {
    std::cout << report.to_json(false) << "\n";
  }
  return report.verdict == erlab::Verdict::fail ? 1 : 0;
}

int run_prop12(const GlobalOptions& opts, int p, int q, int m) {
  const erlab::Prop12Result result = erlab::prop12_construction(p, q, m);
  if (opts.output_format == "text") {
    std::cout << "n=" << result.n << " e=" << result.e << "\n"
              << erlab::graph6_encode(result.graph) << "\n";
  } else {
    json j;
    j["n"] = result.n;
    j["e"] = result.e;
    j["graph6"] = erlab::graph6_encode(result.graph);
    stamp(j, opts);
    emit(j, opts);
  }
  return 0;
}

void report_error(const GlobalOptions& opts, const std::string& type,
                  const std::string& what) {
  if (opts.output_format == "json") {
    json j;
    j["error"] = what;
    j["type"] = type;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "erlab: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Erdos-Rademacher toolkit: minimum clique counts, "
               "extremal families, and claim verification"};
  app.set_config("--config", "", "key=value configuration file");
  app.get_config_formatter_base()->quoteCharacter('"', '"');

  GlobalOptions opts;
  app.add_option("--output-format", opts.output_format,
                 "json | csv | text (default json)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-timestamp", opts.no_timestamp,
               "suppress timestamp fields for byte-stable output");
  app.add_option("--seed", opts.seed, "seed for randomized checks");
  app.add_option("--cache", opts.cache_path,
                 "oracle cache file (JSON lines); env ERLAB_CACHE overrides");
  app.add_option("--max-n-oracle", opts.max_n_oracle,
                 "exhaustive enumeration cap (default 10)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-block", opts.max_block,
                 "triangle-free block size cap (default 12)")
      ->check(CLI::PositiveNumber);

  int n = 0, r = 3;
  std::uint64_t e = 0;
  std::string family, graph_arg, claim_name;
  bool all = false, use_stdin = false, extremal = false, all_e = false;
  bool stdin_partitioned = false;
  int n_min = 4, n_max = 8, p = 3, q = 2, m = 2;
  erlab::ClaimOptions claim_opts;
  int opt_n = 0, opt_r = 0, opt_n_max = 0, opt_trials = 0, opt_n_cap = 0;
  std::uint64_t opt_e = 0;

  CLI::App* profile_cmd = app.add_subcommand("profile", "predictor state for (n, e, r)");
  profile_cmd->add_option("--n", n, "vertex count")->required();
  profile_cmd->add_option("--e", e, "edge count")->required();
  profile_cmd->add_option("--r", r, "clique order")->required();

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build hstar | h1 | h2 family members");
  construct_cmd->add_option("family", family, "hstar | h1 | h2")
      ->required()
      ->check(CLI::IsMember({"hstar", "h1", "h2"}));
  construct_cmd->add_option("--n", n, "vertex count")->required();
  construct_cmd->add_option("--e", e, "edge count")->required();
  construct_cmd->add_flag("--all", all, "emit every member, not just the first");

  CLI::App* count_cmd = app.add_subcommand("count", "count r-cliques");
  count_cmd->add_option("--r", r, "clique order")->required();
  count_cmd->add_option("--graph", graph_arg, "one graph6 string");
  count_cmd->add_flag("--stdin", use_stdin, "read graph6 lines from stdin");

  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "rebuild H0 witnesses as complete t-partite minus a star");
  normalize_cmd->add_flag("--stdin-partitioned", stdin_partitioned,
                          "read '<graph6> <part,labels>' lines from stdin")
      ->required();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exact g_r(n,e) by exhaustive enumeration");
  oracle_cmd->add_option("--n", n, "vertex count")->required();
  oracle_cmd->add_option("--e", e, "edge count")->required();
  oracle_cmd->add_option("--r", r, "clique order")->required();
  oracle_cmd->add_flag("--extremal", extremal, "include extremal canonical forms");

  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep oracle cells into a cache");
  scan_cmd->add_option("--n-min", n_min, "smallest n")->required();
  scan_cmd->add_option("--n-max", n_max, "largest n")->required();
  scan_cmd->add_option("--r", r, "clique order")->required();
  scan_cmd->add_flag("--all-e", all_e, "all e, not just e > t_{r-1}(n)");
  scan_cmd->add_option("--jobs", opts.jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run one claim check and emit a report");
  verify_cmd->add_option("--claim", claim_name, "claim id, e.g. LEMMA_D")
      ->required();
  verify_cmd->add_option("--n", opt_n, "pin the cell's n");
  verify_cmd->add_option("--e", opt_e, "pin the cell's e");
  verify_cmd->add_option("--r", opt_r, "pin the cell's r");
  verify_cmd->add_option("--n-max", opt_n_max, "sweep bound");
  verify_cmd->add_option("--trials", opt_trials, "randomized trial count");
  verify_cmd->add_option("--n-cap", opt_n_cap, "profile scan bound");

  CLI::App* prop12_cmd =
      app.add_subcommand("prop12", "explicit split-star construction");
  prop12_cmd->add_option("--p", p, "number of large parts")->required();
  prop12_cmd->add_option("--q", q, "small part size")->required();
  prop12_cmd->add_option("--m", m, "removed edge count")->required();

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help and friends
    app.exit(err);
    return 2;
  }

  if (const char* env_cache = std::getenv("ERLAB_CACHE"))
    if (*env_cache) opts.cache_path = env_cache;

  claim_opts.seed = opts.seed;
  if (verify_cmd->count("--n")) claim_opts.n = opt_n;
  if (verify_cmd->count("--e")) claim_opts.e = opt_e;
  if (verify_cmd->count("--r")) claim_opts.r = opt_r;
  if (verify_cmd->count("--n-max")) claim_opts.n_max = opt_n_max;
  if (verify_cmd->count("--trials")) claim_opts.trials = opt_trials;
  if (verify_cmd->count("--n-cap")) claim_opts.n_cap = opt_n_cap;

  try {
    if (profile_cmd->parsed()) return run_profile(opts, n, e, r);
    if (construct_cmd->parsed()) return run_construct(opts, family, n, e, all);
    if (count_cmd->parsed()) return run_count(opts, r, graph_arg, use_stdin);
    if (normalize_cmd->parsed()) return run_normalize(opts);
    if (oracle_cmd->parsed()) return run_oracle(opts, n, e, r, extremal);
    if (scan_cmd->parsed()) return run_scan(opts, n_min, n_max, r, all_e);
    if (verify_cmd->parsed()) return run_verify(opts, claim_name, claim_opts);
    if (prop12_cmd->parsed()) return run_prop12(opts, p, q, m);
  } catch (const erlab::capacity_error& err) {
    report_error(opts, "capacity", err.what());
    return 3;
  } catch (const erlab::argument_error& err) {
    report_error(opts, "usage", err.what());
    return 2;
  } catch (const erlab::parse_error& err) {
    report_error(opts, "parse", err.what());
    return 2;
  } catch (const erlab::error& err) {
    report_error(opts, "error", err.what());
    return 1;
  } catch (const std::exception& err) {
    report_error(opts, "internal", err.what());
    return 1;
  }
  return 2;
}
