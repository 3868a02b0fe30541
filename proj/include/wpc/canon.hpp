#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wpc/graph.hpp"

namespace wpc {

/// perm[v] is the image of vertex v.
using Permutation = std::array<std::uint8_t, Graph::kMaxOrder>;

/// Total order on same-order labelled graphs: compare the upper triangles as
/// bit strings in graph6 (column-major) order.
std::strong_ordering compare_upper_triangle(const Graph& a, const Graph& b);

/// Isomorphism-invariant fingerprint: the canonically relabelled graph.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(Graph canonical) : graph_(canonical) {}

  const Graph& graph() const { return graph_; }
  std::string bytes() const { return to_graph6(graph_); }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.graph_ == b.graph_; }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.graph_.order() <=> b.graph_.order(); c != 0) return c;
    return compare_upper_triangle(a.graph_, b.graph_);
  }

 private:
  Graph graph_;
};

struct Labelling {
  CanonicalForm form;
  /// position[v]: where vertex v lands in the canonical graph.
  Permutation position{};
  /// Generators of the automorphism group found during the search.
  std::vector<Permutation> generators;
};

/// Canonical labelling by equitable partition refinement and individualisation,
/// keeping the leaf whose relabelled graph is smallest under
/// compare_upper_triangle. Automorphisms found at equivalent leaves prune the
/// search tree.
Labelling canonical_labelling(const Graph& g);

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labelling(g).form; }

bool are_isomorphic(const Graph& g, const Graph& h);

/// Union-find orbits of the group generated by `gens` on the vertices;
/// entry v holds the least vertex in v's orbit.
std::array<std::uint8_t, Graph::kMaxOrder> vertex_orbits(int n, const std::vector<Permutation>& gens);

}  // namespace wpc

template <>
struct std::hash<wpc::CanonicalForm> {
  std::size_t operator()(const wpc::CanonicalForm& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.graph().order());
    for (int v = 0; v < f.graph().order(); ++v) {
      h = h * 0x9E3779B97F4A7C15ull + f.graph().row(v);
      h ^= h >> 29;
    }
    return h;
  }
};
