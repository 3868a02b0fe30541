#include "wpc/graph.hpp"

#include <algorithm>

namespace wpc {
namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [0, 32], got " + std::to_string(order));
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& e : edges) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    if (g.adjacent(e.u, e.v)) continue;
    g.rows_[e.u] |= vertex_bit(e.v);
    g.rows_[e.v] |= vertex_bit(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({std::min(u, v), std::max(u, v)});
  return from_edges(order, list);
}

Graph Graph::from_rows(int order, std::span<const VertexSet> rows) {
  Graph g(order);
  if (static_cast<int>(rows.size()) < order) throw std::invalid_argument("too few adjacency rows");
  int twice = 0;
  for (int v = 0; v < order; ++v) {
    g.rows_[v] = rows[v];
    twice += std::popcount(rows[v]);
  }
  for (int v = 0; v < order; ++v) {
    if ((g.rows_[v] >> v) & 1u || (g.rows_[v] & ~all_vertices(order))) {
      throw std::invalid_argument("adjacency rows contain a loop or an out-of-range vertex");
    }
    for (VertexSet nb = g.rows_[v]; nb; nb &= nb - 1) {
      if (!g.adjacent(std::countr_zero(nb), v)) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  g.m_ = twice / 2;
  return g;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 1; v < n_; ++v) {
    for (VertexSet low = rows_[v] & (vertex_bit(v) - 1); low; low &= low - 1) {
      out.push_back({std::countr_zero(low), v});
    }
  }
  // column-major order, the same order graph6 uses
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  Graph g = *this;
  if (!g.adjacent(u, v)) {
    g.rows_[u] |= vertex_bit(v);
    g.rows_[v] |= vertex_bit(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  Graph g = *this;
  if (g.adjacent(u, v)) {
    g.rows_[u] &= ~vertex_bit(v);
    g.rows_[v] &= ~vertex_bit(u);
    --g.m_;
  }
  return g;
}

Graph Graph::without_vertices(VertexSet drop) const {
  drop &= vertices();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (int v = 0; v < n_; ++v) index[v] = (drop >> v) & 1u ? -1 : k++;
  Graph g(k);
  for (int v = 0; v < n_; ++v) {
    if (index[v] < 0) continue;
    for (VertexSet nb = rows_[v] & ~drop; nb; nb &= nb - 1) {
      g.rows_[index[v]] |= vertex_bit(index[std::countr_zero(nb)]);
    }
  }
  int twice = 0;
  for (int v = 0; v < k; ++v) twice += g.degree(v);
  g.m_ = twice / 2;
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) g.rows_[v] = all & ~rows_[v] & ~vertex_bit(v);
  g.m_ = n_ * (n_ - 1) / 2 - m_;
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1u)) throw std::invalid_argument("not a permutation");
    seen |= vertex_bit(p);
  }
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet r = 0;
    for (VertexSet nb = rows_[v]; nb; nb &= nb - 1) r |= vertex_bit(perm[std::countr_zero(nb)]);
    g.rows_[perm[v]] = r;
  }
  g.m_ = m_;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.rows_ == b.rows_;
}

// graph6: one header byte 63+n, then the upper triangle in column-major
// order packed big-endian into 6-bit groups, each offset by 63.
Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 string");
  const int head = static_cast<unsigned char>(line[0]);
  if (head == 126) throw Graph6Error("graph6 orders above 62 are not supported");
  if (head < 63 || head > 125) throw Graph6Error("malformed graph6 header byte");
  const int n = head - 63;
  if (n > Graph::kMaxOrder) {
    throw Graph6Error("graph order " + std::to_string(n) + " exceeds the limit of 32");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() - 1 != groups) {
    throw Graph6Error("graph6 payload length mismatch: expected " + std::to_string(groups) +
                      " bytes, got " + std::to_string(line.size() - 1));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  int i = 0, j = 1;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const int c = static_cast<unsigned char>(line[gi + 1]);
    if (c < 63 || c > 126) throw Graph6Error("graph6 payload byte out of range");
    const int value = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw Graph6Error("nonzero graph6 padding bits");
        continue;
      }
      if (set) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = vertex_bit(v), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || component_of(g, 0) == g.vertices();
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  VertexSet unseen = g.vertices();
  while (unseen) {
    // BFS layers alternate sides; the least unseen vertex starts on side 1
    VertexSet layer = unseen & (~unseen + 1);
    bool side1 = true;
    unseen &= ~layer;
    while (layer) {
      (side1 ? bp.part1 : bp.part2) |= layer;
      VertexSet next = 0;
      for (VertexSet f = layer; f; f &= f - 1) next |= g.row(std::countr_zero(f));
      layer = next & unseen;
      unseen &= ~layer;
      side1 = !side1;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet own = (bp.part1 >> v) & 1u ? bp.part1 : bp.part2;
    if (g.row(v) & own) return std::nullopt;
  }
  const int a = set_size(bp.part1), b = set_size(bp.part2);
  bp.balanced = std::min(a, b) == g.order() / 2;
  return bp;
}

DegreeClasses classify_vertices(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("degree classes need at least one vertex");
  DegreeClasses dc;
  dc.threshold = (g.order() - 1) / 2;
  dc.min_degree = g.min_degree();
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= dc.threshold) dc.small |= vertex_bit(v);
  }
  return dc;
}

}  // namespace wpc
