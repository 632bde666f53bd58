#include "erlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "erlab/graph6.hpp"

namespace erlab {

namespace {

constexpr int kMaxN = Graph::kMaxVertices;
constexpr int kCodeWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;

using Perm = std::array<std::uint8_t, kMaxN>;

// Ordered partition of the vertices: `order` lists vertices grouped by cell,
// bit i of `starts` marks that position i begins a cell.
struct OrderedPartition {
  Perm order;
  std::uint64_t starts;
};

// Adjacency code of a leaf labeling: upper-triangle bits in row-major order
// (i<j), packed MSB-first so word-wise comparison is bit-sequence order.
struct Code {
  std::array<std::uint64_t, kCodeWords> words;
  int used_words;

  int compare(const Code& other) const {
    for (int w = 0; w < used_words; ++w) {
      if (words[w] < other.words[w]) return -1;
      if (words[w] > other.words[w]) return 1;
    }
    return 0;
  }
};

struct UnionFind64 {
  std::array<std::uint8_t, kMaxN> parent;

  explicit UnionFind64(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = static_cast<std::uint8_t>(a);
  }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v);
  }

  CanonicalResult run() {
    OrderedPartition unit;
    for (int v = 0; v < n_; ++v) unit.order[v] = static_cast<std::uint8_t>(v);
    unit.starts = 1;  // one cell holding everything
    recurse(unit);

    CanonicalResult out;
    out.labeling.resize(n_);
    for (int pos = 0; pos < n_; ++pos) out.labeling[best_order_[pos]] = pos;
    Graph relabeled(n_);
    for (const auto& [u, v] : g_.edges())
      relabeled.add_edge(out.labeling[u], out.labeling[v]);
    out.form = graph6_encode(relabeled);
    out.automorphism_generators.reserve(auts_.size());
    for (const Perm& a : auts_) {
      std::vector<int> perm(n_);
      for (int v = 0; v < n_; ++v) perm[v] = a[v];
      out.automorphism_generators.push_back(std::move(perm));
    }
    return out;
  }

 private:
  // Equitable refinement: split every cell by neighbor counts against every
  // cell until stable. Splits order subcells by ascending count, which keeps
  // the procedure equivariant under relabeling.
  void refine(OrderedPartition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s0 = 0; s0 < n_ && !changed;) {
        const int s1 = cell_end_n(p, s0);
        std::uint64_t splitter = 0;
        for (int i = s0; i < s1; ++i) splitter |= Graph::bit(p.order[i]);
        for (int c0 = 0; c0 < n_ && !changed;) {
          const int c1 = cell_end_n(p, c0);
          if (c1 - c0 > 1 && split_cell(p, c0, c1, splitter)) changed = true;
          c0 = c1;
        }
        s0 = s1;
      }
    }
  }

  int cell_end_n(const OrderedPartition& p, int start) const {
    if (start + 1 >= n_) return n_;
    const std::uint64_t later = p.starts >> (start + 1);
    return later ? start + 1 + Graph::countr_zero(later) : n_;
  }

  bool split_cell(OrderedPartition& p, int c0, int c1,
                  std::uint64_t splitter) const {
    std::array<int, kMaxN> count;
    bool uniform = true;
    for (int i = c0; i < c1; ++i) {
      count[i] = Graph::popcount(rows_[p.order[i]] & splitter);
      if (count[i] != count[c0]) uniform = false;
    }
    if (uniform) return false;
    // Insertion sort by (count, vertex id): stable and branch-light for the
    // short slices seen here.
    for (int i = c0 + 1; i < c1; ++i) {
      const int cv = count[i];
      const std::uint8_t vv = p.order[i];
      int j = i - 1;
      while (j >= c0 && (count[j] > cv || (count[j] == cv && p.order[j] > vv))) {
        count[j + 1] = count[j];
        p.order[j + 1] = p.order[j];
        --j;
      }
      count[j + 1] = cv;
      p.order[j + 1] = vv;
    }
    for (int i = c0 + 1; i < c1; ++i)
      if (count[i] != count[i - 1]) p.starts |= Graph::bit(i);
    return true;
  }

  bool discrete(const OrderedPartition& p) const {
    // Every position begins a cell.
    const std::uint64_t all =
        n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    return (p.starts & all) == all;
  }

  int first_nonsingleton(const OrderedPartition& p) const {
    for (int c0 = 0; c0 < n_;) {
      const int c1 = cell_end_n(p, c0);
      if (c1 - c0 > 1) return c0;
      c0 = c1;
    }
    return -1;
  }

  Code make_code(const Perm& pos_of) const {
    Code code{};
    code.words.fill(0);
    int t = 0;
    Perm at;  // position -> vertex
    for (int v = 0; v < n_; ++v) at[pos_of[v]] = static_cast<std::uint8_t>(v);
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        const bool bit = (rows_[at[i]] >> at[j]) & 1u;
        if (bit) code.words[t >> 6] |= std::uint64_t{1} << (63 - (t & 63));
        ++t;
      }
    }
    code.used_words = (t + 63) / 64;
    return code;
  }

  void handle_leaf(const OrderedPartition& p) {
    Perm pos_of;
    for (int i = 0; i < n_; ++i) pos_of[p.order[i]] = static_cast<std::uint8_t>(i);
    const Code code = make_code(pos_of);

    if (!have_first_) {
      have_first_ = true;
      first_code_ = code;
      first_order_ = p.order;
    } else if (code.compare(first_code_) == 0) {
      record_automorphism(first_order_, pos_of);
    }
    if (!have_best_ || code.compare(best_code_) < 0) {
      have_best_ = true;
      best_code_ = code;
      best_order_ = p.order;
    } else if (code.compare(best_code_) == 0) {
      record_automorphism(best_order_, pos_of);
    }
  }

  // Two leaves with equal codes witness the automorphism sending v to the
  // vertex occupying v's position in the reference leaf.
  void record_automorphism(const Perm& ref_order, const Perm& pos_of) {
    Perm gamma;
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = ref_order[pos_of[v]];
      if (gamma[v] != v) identity = false;
    }
    if (identity) return;
    for (const Perm& a : auts_)
      if (std::memcmp(a.data(), gamma.data(), static_cast<std::size_t>(n_)) == 0)
        return;
    auts_.push_back(gamma);
  }

  bool fixes_path(const Perm& a) const {
    for (int i = 0; i < path_len_; ++i)
      if (a[path_[i]] != path_[i]) return false;
    return true;
  }

  void recurse(OrderedPartition p) {
    refine(p);
    if (discrete(p)) {
      handle_leaf(p);
      return;
    }
    const int c0 = first_nonsingleton(p);
    const int c1 = cell_end_n(p, c0);
    std::array<std::uint8_t, kMaxN> candidates;
    const int count = c1 - c0;
    for (int i = 0; i < count; ++i) candidates[i] = p.order[c0 + i];
    std::sort(candidates.begin(), candidates.begin() + count);

    // Orbit pruning: candidates equivalent to an already-explored one under
    // automorphisms fixing the current path are skipped. Only automorphisms
    // discovered so far and fixing the path enter the node-local orbits.
    UnionFind64 orbits(n_);
    std::size_t merged_up_to = 0;
    auto absorb_new_automorphisms = [&]() {
      for (; merged_up_to < auts_.size(); ++merged_up_to) {
        const Perm& a = auts_[merged_up_to];
        if (!fixes_path(a))
          continue;
        for (int v = 0; v < n_; ++v) orbits.unite(v, a[v]);
      }
    };
    absorb_new_automorphisms();

    std::array<std::uint8_t, kMaxN> tried;
    int tried_count = 0;
    for (int ci = 0; ci < count; ++ci) {
      const int v = candidates[ci];
      bool pruned = false;
      for (int t = 0; t < tried_count && !pruned; ++t)
        if (orbits.find(tried[t]) == orbits.find(v)) pruned = true;
      if (pruned) continue;

      OrderedPartition child = p;
      individualize(child, c0, c1, static_cast<std::uint8_t>(v));
      path_[path_len_++] = static_cast<std::uint8_t>(v);
      recurse(child);
      --path_len_;
      tried[tried_count++] = static_cast<std::uint8_t>(v);
      absorb_new_automorphisms();
    }
  }

  static void individualize(OrderedPartition& p, int c0, int c1,
                            std::uint8_t v) {
    for (int i = c0; i < c1; ++i) {
      if (p.order[i] == v) {
        for (int j = i; j > c0; --j) p.order[j] = p.order[j - 1];
        p.order[c0] = v;
        break;
      }
    }
    p.starts |= Graph::bit(c0 + 1);
  }

  const Graph& g_;
  int n_;
  std::array<std::uint64_t, kMaxN> rows_;

  Code best_code_{};
  Perm best_order_{};
  bool have_best_ = false;
  Code first_code_{};
  Perm first_order_{};
  bool have_first_ = false;
  std::vector<Perm> auts_;
  Perm path_{};
  int path_len_ = 0;
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) { return CanonSearch(g).run(); }

std::string canonical_form(const Graph& g) { return canonicalize(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

int pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  if (u == v || v >= n) throw argument_error("bad vertex pair");
  return v * (v - 1) / 2 + u;
}

std::vector<int> pair_orbits(int n,
                             const std::vector<std::vector<int>>& generators) {
  const int pairs = n * (n - 1) / 2;
  std::vector<int> parent(pairs);
  for (int i = 0; i < pairs; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& g : generators)
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        unite(pair_index(u, v, n), pair_index(g[u], g[v], n));
  // Path-compress to canonical (minimum) representatives.
  std::vector<int> out(pairs);
  for (int i = 0; i < pairs; ++i) out[i] = find(i);
  return out;
}

}  // namespace erlab
