#pragma once

// Subset DP over simple paths leaving a fixed source vertex.
//
// The k vertices other than the source are renumbered 0..k-1. For every
// nonempty subset S of them, reach[S] is the set of x in S such that some
// path starts at the source, visits exactly S, and ends at x. A path of
// |S| edges ending at a neighbour of the source closes a cycle of length
// |S| + 1.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpc/graph.hpp"
#include "wpc/spectrum.hpp"

namespace wpc::detail {

struct SourceFrame {
  int k = 0;                         // vertices other than the source
  std::uint32_t start_neighbours = 0;  // compact mask
  std::array<std::uint32_t, Graph::kMaxOrder> adj{};  // compact rows
};

/// Drops bit v from a mask and closes the gap.
inline std::uint32_t squeeze_out(std::uint32_t mask, int v) {
  const std::uint32_t low = vertex_bit(v) - 1;
  return (mask & low) | ((mask >> 1) & ~low);
}

inline void check_dp_order(const Graph& g) {
  if (g.order() > kMaxSpectrumOrder) {
    throw std::length_error("exact cycle spectra are limited to order " +
                            std::to_string(kMaxSpectrumOrder));
  }
}

/// Source v, every other vertex allowed.
inline SourceFrame frame_all_but(const Graph& g, int v) {
  SourceFrame f;
  f.k = g.order() - 1;
  f.start_neighbours = squeeze_out(g.row(v), v);
  for (int x = 0, c = 0; x < g.order(); ++x) {
    if (x == v) continue;
    f.adj[c++] = squeeze_out(g.row(x) & ~vertex_bit(v), v);
  }
  return f;
}

/// Source r, only vertices greater than r allowed.
inline SourceFrame frame_above(const Graph& g, int r) {
  SourceFrame f;
  f.k = g.order() - 1 - r;
  if (f.k <= 0) return f;
  f.start_neighbours = g.row(r) >> (r + 1);
  for (int x = r + 1; x < g.order(); ++x) f.adj[x - r - 1] = g.row(x) >> (r + 1);
  return f;
}

std::vector<std::uint32_t>& dp_scratch();

/// Runs the DP and calls on_state(S, reach[S]) for every S with nonempty reach.
template <class OnState>
void run_path_dp(const SourceFrame& f, OnState&& on_state) {
  if (f.k <= 0) return;
  auto& reach = dp_scratch();
  const std::uint32_t total = std::uint32_t{1} << f.k;
  if (reach.size() < total) reach.resize(total);
  reach[0] = 0;
  for (std::uint32_t s = 1; s < total; ++s) {
    std::uint32_t r = 0;
    if ((s & (s - 1)) == 0) {
      r = s & f.start_neighbours;
    } else {
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        const std::uint32_t b = rest & (~rest + 1);
        if (f.adj[std::countr_zero(b)] & reach[s ^ b]) r |= b;
      }
    }
    reach[s] = r;
    if (r) on_state(s, r);
  }
}

/// Cycle lengths through the frame's source.
inline LengthSet frame_cycle_lengths(const SourceFrame& f) {
  std::uint64_t bits = 0;
  run_path_dp(f, [&](std::uint32_t s, std::uint32_t r) {
    if (r & f.start_neighbours) bits |= std::uint64_t{1} << (std::popcount(s) + 1);
  });
  // |S| = 1 would be the edge traversed twice
  return LengthSet::from_bits(bits & ~std::uint64_t{0b111});
}

}  // namespace wpc::detail
