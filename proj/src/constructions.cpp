#include "wpc/constructions.hpp"

#include <string>
#include <vector>

namespace wpc {

int b_threshold(int n) {
  if (n < 1) throw std::invalid_argument("b(n) needs n >= 1");
  return (n - 1) * (n - 1) / 4 + 2;
}

Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0 || s + t > Graph::kMaxOrder) {
    throw std::invalid_argument("K_{s,t} needs s, t >= 0 and s + t <= 32");
  }
  std::vector<Edge> edges;
  for (int a = 0; a < s; ++a) {
    for (int b = s; b < s + t; ++b) edges.push_back({a, b});
  }
  return Graph::from_edges(s + t, edges);
}

Graph cycle_graph(int k) {
  if (k < 3 || k > Graph::kMaxOrder) throw std::invalid_argument("C_k needs 3 <= k <= 32");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return Graph::from_edges(k, edges);
}

Graph path_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(k, edges);
}

Graph complete_graph(int k) {
  return Graph(k).complement();
}

BtLayout bt_layout(int n) {
  if (n < 5 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("BT(n) is defined for 5 <= n <= 32, got " + std::to_string(n));
  }
  return {(n - 1) / 2, n / 2, n - 1};
}

Graph bt(int n) {
  const auto lay = bt_layout(n);
  std::vector<Edge> edges;
  for (int a = 0; a < lay.part1_size; ++a) {
    for (int b = lay.part1_size; b < n - 1; ++b) edges.push_back({a, b});
  }
  edges.push_back({0, lay.apex});
  edges.push_back({lay.part1_size, lay.apex});
  return Graph::from_edges(n, edges);
}

Graph gn(int n) {
  if (n < 6 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("G_n is defined for 6 <= n <= 32, got " + std::to_string(n));
  }
  const Graph h = bt(n - 1);
  const auto lay = bt_layout(n - 1);
  const int x = lay.apex;
  const int y = n - 1;
  std::vector<Edge> edges = h.edges();
  edges.push_back({x, y});
  // the larger part of bt(n-1) minus the apex is {p..n-3}; the apex's neighbour there is p
  for (int b = lay.part1_size + 1; b < n - 2; ++b) edges.push_back({b, y});
  return Graph::from_edges(n, edges);
}

}  // namespace wpc
