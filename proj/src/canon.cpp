#include "wpc/canon.hpp"

#include <algorithm>
#include <bit>

namespace wpc {
namespace {

using Rows = std::array<VertexSet, Graph::kMaxOrder>;

std::strong_ordering compare_rows(const Rows& a, const Rows& b, int n) {
  for (int j = 1; j < n; ++j) {
    const VertexSet mask = vertex_bit(j) - 1;
    const VertexSet ca = a[j] & mask, cb = b[j] & mask;
    if (ca != cb) {
      const VertexSet first = (ca ^ cb) & (~(ca ^ cb) + 1);
      return (ca & first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

// Ordered partition of the vertex set; cells are vertex masks.
struct Partition {
  std::array<VertexSet, Graph::kMaxOrder> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }

  void split(int at, const VertexSet* parts, int nparts) {
    std::copy_backward(cells.begin() + at + 1, cells.begin() + count, cells.begin() + count + nparts - 1);
    std::copy(parts, parts + nparts, cells.begin() + at);
    count += nparts - 1;
  }
};

// Splits cells by neighbour counts into other cells until the partition is
// equitable. Every step depends only on cell positions, so the result is
// label-invariant.
void refine(const Graph& g, Partition& p) {
  const int n = g.order();
  bool changed = true;
  while (changed && !p.discrete(n)) {
    changed = false;
    for (int wi = 0; wi < p.count; ++wi) {
      const VertexSet splitter = p.cells[wi];
      for (int xi = 0; xi < p.count; ++xi) {
        const VertexSet cell = p.cells[xi];
        if ((cell & (cell - 1)) == 0) continue;
        std::array<std::uint8_t, Graph::kMaxOrder> cnt;
        int lo = Graph::kMaxOrder + 1, hi = -1;
        for (VertexSet c = cell; c; c &= c - 1) {
          const int v = std::countr_zero(c);
          cnt[v] = static_cast<std::uint8_t>(std::popcount(g.row(v) & splitter));
          lo = std::min<int>(lo, cnt[v]);
          hi = std::max<int>(hi, cnt[v]);
        }
        if (lo == hi) continue;
        std::array<VertexSet, Graph::kMaxOrder> parts;
        int nparts = 0;
        for (VertexSet rest = cell; rest;) {
          int next = Graph::kMaxOrder + 1;
          for (VertexSet c = rest; c; c &= c - 1) next = std::min<int>(next, cnt[std::countr_zero(c)]);
          VertexSet group = 0;
          for (VertexSet c = rest; c; c &= c - 1) {
            if (cnt[std::countr_zero(c)] == next) group |= c & (~c + 1);
          }
          parts[nparts++] = group;
          rest &= ~group;
        }
        p.split(xi, parts.data(), nparts);
        xi += nparts - 1;
        changed = true;
      }
    }
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  Labelling run() {
    Partition root;
    if (n_ > 0) {
      root.cells[0] = g_.vertices();
      root.count = 1;
      refine(g_, root);
    }
    descend(root, 0);
    Labelling out;
    out.form = CanonicalForm(Graph::from_rows(n_, std::span<const VertexSet>(best_rows_.data(), n_)));
    out.position = best_pos_;
    out.generators = std::move(gens_);
    return out;
  }

 private:
  int descend(const Partition& p, int depth) {
    if (p.discrete(n_)) return leaf(p, depth);

    int target = -1, smallest = Graph::kMaxOrder + 1;
    for (int i = 0; i < p.count; ++i) {
      const int size = std::popcount(p.cells[i]);
      if (size > 1 && size < smallest) {
        smallest = size;
        target = i;
      }
    }
    const VertexSet cell = p.cells[target];
    VertexSet explored = 0;
    std::size_t gens_seen = 0;
    std::array<std::uint8_t, Graph::kMaxOrder> orbit{};
    for (VertexSet rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored) {
        if (gens_seen != gens_.size() || gens_seen == 0) {
          orbit = stabiliser_orbits(depth);
          gens_seen = gens_.size();
        }
        bool seen = false;
        for (VertexSet e = explored; e && !seen; e &= e - 1) seen = orbit[std::countr_zero(e)] == orbit[v];
        if (seen) continue;
      }
      explored |= vertex_bit(v);
      Partition child = p;
      const VertexSet single[2] = {vertex_bit(v), cell & ~vertex_bit(v)};
      child.split(target, single, 2);
      refine(g_, child);
      path_[depth] = static_cast<std::uint8_t>(v);
      const int back = descend(child, depth + 1);
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Partition& p, int depth) {
    Permutation pos{};
    std::array<std::uint8_t, Graph::kMaxOrder> lab{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      VertexSet r = 0;
      for (VertexSet nb = g_.row(lab[i]); nb; nb &= nb - 1) r |= vertex_bit(pos[std::countr_zero(nb)]);
      rows[i] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_pos_ = best_pos_ = pos;
      first_path_ = best_path_ = path_;
      return depth;
    }
    if (rows == first_rows_) {
      record_automorphism(first_pos_, lab);
      return common_prefix(first_path_, depth);
    }
    const auto cmp = compare_rows(rows, best_rows_, n_);
    if (cmp < 0) {
      best_rows_ = rows;
      best_pos_ = pos;
      best_path_ = path_;
      return depth;
    }
    if (cmp == 0) {
      record_automorphism(best_pos_, lab);
      return common_prefix(best_path_, depth);
    }
    return depth;
  }

  // Two leaves with the same relabelled graph: the vertex at position i of
  // one maps to the vertex at position i of the other.
  void record_automorphism(const Permutation& ref_pos, const std::array<std::uint8_t, Graph::kMaxOrder>& lab) {
    Permutation gamma{};
    for (int v = 0; v < n_; ++v) gamma[v] = lab[ref_pos[v]];
    gens_.push_back(gamma);
  }

  int common_prefix(const std::array<std::uint8_t, Graph::kMaxOrder>& other, int depth) const {
    int k = 0;
    while (k < depth && other[k] == path_[k]) ++k;
    return k;
  }

  std::array<std::uint8_t, Graph::kMaxOrder> stabiliser_orbits(int depth) const {
    std::vector<Permutation> fixing;
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (fixes) fixing.push_back(gamma);
    }
    return vertex_orbits(n_, fixing);
  }

  const Graph& g_;
  int n_;
  std::array<std::uint8_t, Graph::kMaxOrder> path_{};
  bool have_first_ = false;
  Rows first_rows_{}, best_rows_{};
  Permutation first_pos_{}, best_pos_{};
  std::array<std::uint8_t, Graph::kMaxOrder> first_path_{}, best_path_{};
  std::vector<Permutation> gens_;
};

}  // namespace

std::strong_ordering compare_upper_triangle(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("graphs of different order");
  Rows ra{}, rb{};
  for (int v = 0; v < a.order(); ++v) {
    ra[v] = a.row(v);
    rb[v] = b.row(v);
  }
  return compare_rows(ra, rb, a.order());
}

std::array<std::uint8_t, Graph::kMaxOrder> vertex_orbits(int n, const std::vector<Permutation>& gens) {
  std::array<std::uint8_t, Graph::kMaxOrder> parent{};
  for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& gamma : gens) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v), b = find(gamma[v]);
      if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
  }
  for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(find(v));
  return parent;
}

Labelling canonical_labelling(const Graph& g) {
  return Search(g).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::array<int, Graph::kMaxOrder> dg{}, dh{};
  for (int v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.begin() + g.order());
  std::sort(dh.begin(), dh.begin() + h.order());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace wpc
