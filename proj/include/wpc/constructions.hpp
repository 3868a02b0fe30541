#pragma once

#include "wpc/graph.hpp"

namespace wpc {

/// floor((n-1)^2 / 4) + 2, the size threshold of the dense nonbipartite results.
int b_threshold(int n);

/// Parts {0..s-1} and {s..s+t-1}, all cross edges.
Graph complete_bipartite(int s, int t);

/// Vertices 0..k-1 in cyclic order. Requires k >= 3.
Graph cycle_graph(int k);

Graph path_graph(int k);
Graph complete_graph(int k);

/// K_{p,q} with p = floor((n-1)/2), q = ceil((n-1)/2) on vertices 0..n-2
/// (parts {0..p-1} and {p..n-2}), plus the triangle apex n-1 joined to 0 and p.
/// Requires n >= 5.
Graph bt(int n);

/// Vertex layout of bt(n).
struct BtLayout {
  int part1_size = 0;  // vertices 0..part1_size-1
  int part2_size = 0;  // vertices part1_size..n-2
  int apex = 0;
};
BtLayout bt_layout(int n);

/// bt(n-1) plus a vertex y = n-1 joined to the apex x = n-2 and to every
/// vertex of the larger part except the apex's neighbour there. Requires n >= 6.
Graph gn(int n);

}  // namespace wpc
