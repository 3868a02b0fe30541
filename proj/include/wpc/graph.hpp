#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wpc {

/// Set of vertices of a graph with at most 32 vertices; bit v stands for vertex v.
using VertexSet = std::uint32_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (vertex_bit(n) - 1);
}
inline constexpr int set_size(VertexSet s) { return std::popcount(s); }

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown by the graph6 decoder.
class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple graph on at most 32 vertices, stored as one adjacency
/// word per vertex. "Edits" return new values.
class Graph {
 public:
  static constexpr int kMaxOrder = 32;

  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges);
  /// Rows must be symmetric and loop-free; checked.
  static Graph from_rows(int order, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const { return m_; }

  VertexSet row(int v) const { return rows_[v]; }
  VertexSet vertices() const { return all_vertices(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  Graph without_vertices(VertexSet drop) const;  // induced on the rest, relabeled in order
  Graph complement() const;
  /// Vertex v of *this becomes vertex perm[v] of the result.
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Decodes one graph6 line (trailing newline tolerated). Orders above 32 are rejected.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

struct Bipartition {
  VertexSet part1 = 0;
  VertexSet part2 = 0;
  bool balanced = false;
};

/// 2-colouring by BFS from the least vertex of each component (that vertex
/// goes to part1); nullopt iff the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g);
VertexSet component_of(const Graph& g, int v);

enum class VertexClass : std::uint8_t { Small, Big };

/// A vertex is small when deg(v) <= floor((n-1)/2).
struct DegreeClasses {
  int threshold = 0;
  int min_degree = 0;
  VertexSet small = 0;

  VertexClass at(int v) const {
    return (small >> v) & 1u ? VertexClass::Small : VertexClass::Big;
  }
};

DegreeClasses classify_vertices(const Graph& g);

}  // namespace wpc
