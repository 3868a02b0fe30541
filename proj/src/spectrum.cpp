#include "wpc/spectrum.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "path_dp.hpp"

namespace wpc {
namespace detail {

std::vector<std::uint32_t>& dp_scratch() {
  thread_local std::vector<std::uint32_t> buffer;
  return buffer;
}

}  // namespace detail

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
}

// Compact index of vertex w once the source v has been squeezed out.
int compact_index(int w, int v) { return w < v ? w : w - 1; }

std::vector<LengthSet> endpoint_path_lengths(const Graph& g, int u) {
  std::vector<LengthSet> out(static_cast<std::size_t>(g.order()));
  const auto frame = detail::frame_all_but(g, u);
  std::array<std::uint64_t, Graph::kMaxOrder> bits{};
  detail::run_path_dp(frame, [&](std::uint32_t s, std::uint32_t r) {
    const std::uint64_t len = std::uint64_t{1} << std::popcount(s);
    for (; r; r &= r - 1) bits[std::countr_zero(r)] |= len;
  });
  for (int w = 0; w < g.order(); ++w) {
    if (w != u) out[w] = LengthSet::from_bits(bits[compact_index(w, u)]);
  }
  return out;
}

// {L + 1 : L in paths, L >= 2}
LengthSet close_paths(LengthSet paths) {
  return LengthSet::from_bits((paths.bits() & ~std::uint64_t{0b11}) << 1);
}

bool weakly_covers(LengthSet s, LengthSet graph_lengths) {
  return !graph_lengths.empty() && s.covers(*graph_lengths.min(), *graph_lengths.max());
}

bool fully_covers(LengthSet s, int n) { return n >= 3 && s.covers(3, n); }

}  // namespace

LengthSet vertex_cycle_lengths(const Graph& g, int v) {
  check_vertex(g, v);
  detail::check_dp_order(g);
  return detail::frame_cycle_lengths(detail::frame_all_but(g, v));
}

LengthSet graph_cycle_lengths(const Graph& g) {
  detail::check_dp_order(g);
  LengthSet all;
  for (int r = 0; r + 2 < g.order(); ++r) all |= detail::frame_cycle_lengths(detail::frame_above(g, r));
  return all;
}

CycleSpectrum cycle_spectrum(const Graph& g) {
  detail::check_dp_order(g);
  CycleSpectrum sp;
  sp.vertex_lengths.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    sp.vertex_lengths[v] = detail::frame_cycle_lengths(detail::frame_all_but(g, v));
    sp.graph_lengths |= sp.vertex_lengths[v];
  }
  return sp;
}

LengthSet path_length_spectrum(const Graph& g, int u, int w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w) throw std::invalid_argument("path endpoints must be distinct");
  detail::check_dp_order(g);
  const auto frame = detail::frame_all_but(g, u);
  const std::uint32_t target = vertex_bit(compact_index(w, u));
  std::uint64_t bits = 0;
  detail::run_path_dp(frame, [&](std::uint32_t s, std::uint32_t r) {
    if (r & target) bits |= std::uint64_t{1} << std::popcount(s);
  });
  return LengthSet::from_bits(bits);
}

std::vector<LengthSet> path_lengths_from(const Graph& g, int u) {
  check_vertex(g, u);
  detail::check_dp_order(g);
  return endpoint_path_lengths(g, u);
}

LengthSet edge_cycle_lengths(const Graph& g, int u, int w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w || !g.adjacent(u, w)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(w) +
                                "} is not an edge");
  }
  // a (u,w)-path with at least two edges never uses the edge uw itself
  return close_paths(path_length_spectrum(g, u, w));
}

PancyclicityReport classify_pancyclicity(const Graph& g) {
  detail::check_dp_order(g);
  const int n = g.order();
  PancyclicityReport rep;
  rep.edges = g.edges();
  rep.edge_lengths.resize(rep.edges.size());
  rep.spectrum.vertex_lengths.resize(static_cast<std::size_t>(n));

  std::vector<std::vector<LengthSet>> paths(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) < 2) continue;
    paths[u] = endpoint_path_lengths(g, u);
    LengthSet through;
    for (VertexSet nb = g.row(u); nb; nb &= nb - 1) through |= close_paths(paths[u][std::countr_zero(nb)]);
    rep.spectrum.vertex_lengths[u] = through;
    rep.spectrum.graph_lengths |= through;
  }
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    const auto [u, w] = rep.edges[i];
    if (!paths[u].empty()) rep.edge_lengths[i] = close_paths(paths[u][w]);
  }

  const LengthSet all = rep.spectrum.graph_lengths;
  for (int v = 0; v < n; ++v) {
    const LengthSet s = rep.spectrum.vertex_lengths[v];
    if (fully_covers(s, n)) rep.pancyclic_vertices |= vertex_bit(v);
    if (weakly_covers(s, all)) rep.weakly_pancyclic_vertices |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    if (fully_covers(rep.edge_lengths[i], n)) rep.pancyclic_edges.push_back(rep.edges[i]);
    if (weakly_covers(rep.edge_lengths[i], all)) rep.weakly_pancyclic_edges.push_back(rep.edges[i]);
  }
  rep.graph_pancyclic = fully_covers(all, n);
  rep.graph_weakly_pancyclic = weakly_covers(all, all);
  return rep;
}

bool has_weakly_pancyclic_vertex(const Graph& g) {
  detail::check_dp_order(g);
  const int n = g.order();
  if (n < 3) return false;

  std::array<int, Graph::kMaxOrder> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  // A pancyclic vertex is weakly pancyclic whatever g and c turn out to be,
  // which settles most dense graphs before the global spectrum is needed.
  std::optional<LengthSet> all;
  VertexSet on_triangle = 0;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (g.degree(v) < 2) break;
    if (all && all->contains(3) && !((on_triangle >> v) & 1u)) continue;
    const LengthSet s = detail::frame_cycle_lengths(detail::frame_all_but(g, v));
    if (fully_covers(s, n)) return true;
    if (!all) {
      all = graph_cycle_lengths(g);
      if (all->empty()) return false;
      if (all->contains(3)) {
        for (int x = 0; x < n; ++x) {
          for (VertexSet nb = g.row(x) & ~(vertex_bit(x + 1) - 1); nb; nb &= nb - 1) {
            const int y = std::countr_zero(nb);
            if (g.row(x) & g.row(y)) on_triangle |= vertex_bit(x) | vertex_bit(y);
          }
        }
      }
    }
    if (weakly_covers(s, *all)) return true;
  }
  return false;
}

}  // namespace wpc
