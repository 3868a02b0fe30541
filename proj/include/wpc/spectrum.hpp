#pragma once

#include <optional>
#include <vector>

#include "wpc/graph.hpp"
#include "wpc/length_set.hpp"

namespace wpc {

/// The path DP keeps 2^(n-1) endpoint masks per source vertex, so exact
/// spectra are limited to this order (the search harness stays at n <= 14).
inline constexpr int kMaxSpectrumOrder = 26;

struct CycleSpectrum {
  std::vector<LengthSet> vertex_lengths;  // lengths of cycles through each vertex
  LengthSet graph_lengths;                // union over all vertices

  std::optional<int> girth() const { return graph_lengths.min(); }
  std::optional<int> circumference() const { return graph_lengths.max(); }
  bool acyclic() const { return graph_lengths.empty(); }
};

/// Cycle lengths realised through vertex v.
LengthSet vertex_cycle_lengths(const Graph& g, int v);

/// All cycle lengths of g. Each cycle is found once, rooted at its least vertex.
LengthSet graph_cycle_lengths(const Graph& g);

CycleSpectrum cycle_spectrum(const Graph& g);

/// Lengths of cycles through the edge {u, w}. Throws if the edge is absent.
LengthSet edge_cycle_lengths(const Graph& g, int u, int w);

/// Lengths of all (u, w)-paths, counted in edges. Throws if u == w.
LengthSet path_length_spectrum(const Graph& g, int u, int w);

/// Path lengths from u to every other vertex, indexed by endpoint; entry u is empty.
std::vector<LengthSet> path_lengths_from(const Graph& g, int u);

inline bool is_hamiltonian(const Graph& g) {
  return g.order() >= 3 && graph_cycle_lengths(g).contains(g.order());
}

/// Vertex/edge/graph classification. Acyclic graphs report no weakly
/// pancyclic vertices or edges and are not weakly pancyclic; graphs with
/// fewer than 3 vertices are never pancyclic.
struct PancyclicityReport {
  CycleSpectrum spectrum;
  std::vector<LengthSet> edge_lengths;  // parallel to `edges`
  std::vector<Edge> edges;
  VertexSet pancyclic_vertices = 0;
  VertexSet weakly_pancyclic_vertices = 0;
  std::vector<Edge> pancyclic_edges;
  std::vector<Edge> weakly_pancyclic_edges;
  bool graph_pancyclic = false;
  bool graph_weakly_pancyclic = false;
};

PancyclicityReport classify_pancyclicity(const Graph& g);

/// Existence-only test used by the search: computes vertex spectra in
/// descending degree order and stops at the first weakly pancyclic vertex.
bool has_weakly_pancyclic_vertex(const Graph& g);

}  // namespace wpc
