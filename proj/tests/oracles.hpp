#pragma once

// Brute-force reference computations for tests. Nothing here shares code
// paths with the subset DP or the canonical labelling search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wpc/graph.hpp"
#include "wpc/length_set.hpp"

namespace wpc::oracle {

struct NaiveSpectrum {
  std::vector<LengthSet> vertex;
  std::map<std::pair<int, int>, LengthSet> edge;
  LengthSet graph;
};

/// Walks every simple path from every start vertex; each closing edge back
/// to the start yields a cycle.
inline NaiveSpectrum naive_cycles(const Graph& g) {
  const int n = g.order();
  NaiveSpectrum out;
  out.vertex.resize(n);
  for (const auto& e : g.edges()) out.edge[{e.u, e.v}] = LengthSet{};
  std::vector<int> path;
  std::vector<bool> used(n, false);
  auto record = [&]() {
    const int len = static_cast<int>(path.size());
    out.graph.insert(len);
    for (int i = 0; i < len; ++i) {
      const int a = path[i], b = path[(i + 1) % len];
      out.vertex[a].insert(len);
      out.edge[{std::min(a, b), std::max(a, b)}].insert(len);
    }
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (path.size() >= 3 && g.adjacent(v, path[0])) record();
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w) || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(dfs, s);
    used[s] = false;
  }
  return out;
}

inline LengthSet naive_path_lengths(const Graph& g, int u, int w) {
  const int n = g.order();
  LengthSet out;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int v, int len) -> void {
    if (v == w) {
      out.insert(len);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (!g.adjacent(v, x) || used[x]) continue;
      used[x] = true;
      self(self, x, len + 1);
      used[x] = false;
    }
  };
  used[u] = true;
  dfs(dfs, u, 0);
  return out;
}

/// Minimum graph6 string over all n! relabellings.
inline std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = to_graph6(g.permuted(perm));
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::uint64_t brute_automorphism_count(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    count += g.permuted(perm) == g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Every labelled graph on n vertices (n <= 7), as an edge bitmask in graph6 order.
inline Graph labelled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1u) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

/// One entry per isomorphism class of order-n graphs (n <= 7): the least
/// labelled edge mask of the class. Sweeps all masks in increasing order and
/// marks every relabelling of each new class as seen.
inline std::vector<std::uint64_t> labelled_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> pair_maps;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> map(pairs);
    int k = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        const int a = std::min(perm[i], perm[j]), b = std::max(perm[i], perm[j]);
        map[k] = b * (b - 1) / 2 + a;
      }
    }
    pair_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(std::size_t{1} << pairs, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t mask = 0; mask < seen.size(); ++mask) {
    if (seen[mask]) continue;
    reps.push_back(mask);
    for (const auto& map : pair_maps) {
      std::uint64_t image = 0;
      for (int k = 0; k < pairs; ++k) {
        if ((mask >> k) & 1u) image |= std::uint64_t{1} << map[k];
      }
      seen[image] = true;
    }
  }
  return reps;
}

inline Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace wpc::oracle
