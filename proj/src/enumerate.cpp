#include "wpc/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "wpc/canon.hpp"

namespace wpc {
namespace {

int max_size(int n) { return n * (n - 1) / 2; }

// Index of the pair {i, j}, i < j, in graph6 (column-major) order.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Isomorphism-invariant edge key; larger keys are preferred as the
// canonical edge to delete.
std::uint32_t edge_key(const Graph& g, int x, int y) {
  const int dx = g.degree(x), dy = g.degree(y);
  return (static_cast<std::uint32_t>(std::max(dx, dy)) << 12) |
         (static_cast<std::uint32_t>(std::min(dx, dy)) << 6) |
         static_cast<std::uint32_t>(std::popcount(g.row(x) & g.row(y)));
}

class PairOrbits {
 public:
  explicit PairOrbits(int n) : n_(n), parent_(static_cast<std::size_t>(max_size(n))) {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  /// Orbits of the pairs accepted by `keep` under the generated group.
  template <class Keep>
  void close(const std::vector<Permutation>& gens, Keep&& keep) {
    for (const auto& gamma : gens) {
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
          if (!keep(i, j)) continue;
          const int a = gamma[i], b = gamma[j];
          join(pair_index(i, j), pair_index(std::min(a, b), std::max(a, b)));
        }
      }
    }
  }

 private:
  int n_;
  std::vector<int> parent_;
};

// Canonical-deletion acceptance test for child = parent + {a, b}.
// `labelled` is set when the child's canonical labelling had to be computed.
bool accept_child(const Graph& child, int a, int b, Labelling& lab, bool& labelled) {
  const int n = child.order();
  const std::uint32_t mine = edge_key(child, a, b);
  int ties = 0;
  for (int x = 0; x < n; ++x) {
    for (VertexSet up = child.row(x) & ~(vertex_bit(x + 1) - 1); up; up &= up - 1) {
      const std::uint32_t k = edge_key(child, x, std::countr_zero(up));
      if (k > mine) return false;
      ties += k == mine;
    }
  }
  if (ties == 1) return true;

  lab = canonical_labelling(child);
  labelled = true;
  int cx = -1, cy = -1, best_hi = -1, best_lo = -1;
  for (int x = 0; x < n; ++x) {
    for (VertexSet up = child.row(x) & ~(vertex_bit(x + 1) - 1); up; up &= up - 1) {
      const int y = std::countr_zero(up);
      if (edge_key(child, x, y) != mine) continue;
      const int px = lab.position[x], py = lab.position[y];
      const int hi = std::max(px, py), lo = std::min(px, py);
      if (hi > best_hi || (hi == best_hi && lo > best_lo)) {
        best_hi = hi;
        best_lo = lo;
        cx = x;
        cy = y;
      }
    }
  }
  if ((cx == a && cy == b) || (cx == b && cy == a)) return true;
  PairOrbits orbits(n);
  orbits.close(lab.generators, [&](int i, int j) { return child.adjacent(i, j); });
  return orbits.find(pair_index(std::min(a, b), std::max(a, b))) ==
         orbits.find(pair_index(std::min(cx, cy), std::max(cx, cy)));
}

// Depth-first canonical augmentation over edge counts in [lo, hi].
class Augmenter {
 public:
  using NodeFn = std::function<void(const Graph&)>;

  Augmenter(int hi, NodeFn on_node, int stop_depth = -1)
      : hi_(hi), stop_depth_(stop_depth), on_node_(std::move(on_node)) {}

  // Visits every proper descendant of `parent`, which must be one canonical
  // class representative.
  void expand(const Graph& parent) {
    if (parent.size() >= hi_) return;
    expand(parent, canonical_labelling(parent).generators);
  }

 private:
  void expand(const Graph& parent, const std::vector<Permutation>& gens) {
    const int n = parent.order();
    PairOrbits orbits(n);
    orbits.close(gens, [&](int i, int j) { return !parent.adjacent(i, j); });
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (parent.adjacent(i, j) || orbits.find(pair_index(i, j)) != pair_index(i, j)) continue;
        const Graph child = parent.with_edge(i, j);
        Labelling lab;
        bool labelled = false;
        if (!accept_child(child, i, j, lab, labelled)) continue;
        on_node_(child);
        if (child.size() >= hi_ || child.size() == stop_depth_) continue;
        if (!labelled) lab = canonical_labelling(child);
        expand(child, lab.generators);
      }
    }
  }

  int hi_;
  int stop_depth_;
  NodeFn on_node_;
};

struct Space {
  bool complement = false;
  int lo = 0, hi = 0;
};

Space generation_space(const EnumFilter& f) {
  const int total = max_size(f.order);
  Space s;
  s.complement = total - f.size_min < f.size_max;
  s.lo = s.complement ? total - f.size_max : f.size_min;
  s.hi = s.complement ? total - f.size_min : f.size_max;
  return s;
}

bool emit(const EnumFilter& f, bool complement, const Graph& g, const GraphVisitor& visit) {
  const Graph out = complement ? g.complement() : g;
  if (f.nonbipartite_only && is_bipartite(out)) return false;
  if (f.connected_only && !is_connected(out)) return false;
  visit(out);
  return true;
}

}  // namespace

EnumFilter normalised(EnumFilter f) {
  if (f.order < 0 || f.order > Graph::kMaxOrder) {
    throw std::invalid_argument("enumeration order must be in [0, 32]");
  }
  const int total = max_size(f.order);
  if (f.size_max < 0) f.size_max = total;
  if (f.size_min < 0 || f.size_min > f.size_max || f.size_max > total) {
    throw std::invalid_argument("edge bounds must satisfy 0 <= min <= max <= " + std::to_string(total));
  }
  return f;
}

std::uint64_t enumerate(const EnumFilter& filter, const GraphVisitor& visit) {
  const EnumFilter f = normalised(filter);
  const Space s = generation_space(f);
  std::uint64_t count = 0;
  auto on_node = [&](const Graph& g) {
    if (g.size() >= s.lo && emit(f, s.complement, g, visit)) ++count;
  };
  const Graph root(f.order);
  on_node(root);
  Augmenter(s.hi, on_node).expand(root);
  return count;
}

std::map<int, std::uint64_t> count_by_size(int n) {
  std::map<int, std::uint64_t> table;
  for (int m = 0; m <= max_size(n); ++m) table[m] = 0;
  enumerate(EnumFilter{.order = n}, [&](const Graph& g) { ++table[g.size()]; });
  return table;
}

ShardPlan::ShardPlan(const EnumFilter& filter, std::size_t target_shards) : filter_(normalised(filter)) {
  const Space s = generation_space(filter_);
  complement_ = s.complement;
  lo_ = s.lo;
  hi_ = s.hi;
  // deepen the split one level at a time until the frontier is wide enough
  roots_.push_back(Graph(filter_.order));
  for (int depth = 0; roots_.size() < target_shards && depth < hi_; ++depth) {
    std::vector<Graph> next;
    for (const auto& g : roots_) {
      if (g.size() >= lo_) prefix_.push_back(g);
      Augmenter(hi_, [&](const Graph& child) { next.push_back(child); }, depth + 1).expand(g);
    }
    roots_ = std::move(next);
  }
}

std::uint64_t ShardPlan::run(std::size_t shard, const GraphVisitor& visit) const {
  if (shard >= size()) throw std::out_of_range("shard index out of range");
  std::uint64_t count = 0;
  if (!prefix_.empty()) {
    if (shard == 0) {
      for (const auto& g : prefix_) count += emit(filter_, complement_, g, visit);
      return count;
    }
    --shard;
  }
  auto on_node = [&](const Graph& g) {
    if (g.size() >= lo_ && emit(filter_, complement_, g, visit)) ++count;
  };
  const Graph& root = roots_[shard];
  on_node(root);
  Augmenter(hi_, on_node).expand(root);
  return count;
}

}  // namespace wpc
