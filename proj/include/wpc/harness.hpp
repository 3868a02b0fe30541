#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wpc/graph.hpp"

namespace wpc {

struct RunOptions {
  int jobs = 0;                 // <= 0: all available cores
  std::string resume_dir;       // search-f checkpoints; empty disables them
  std::ostream* progress = nullptr;
};

/// Outcome of one exhaustive sweep. Counterexamples are canonical graph6
/// strings in canonical-form order.
struct VerificationReport {
  std::string claim;
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t in_hypothesis = 0;
  std::vector<std::string> counterexamples;
  std::int64_t elapsed_ms = 0;
  /// False for scans that only report (the open conjecture).
  bool asserted = true;
  /// Claim-specific checks, e.g. how many weakly pancyclic vertices bt(n) has.
  std::vector<std::pair<std::string, std::int64_t>> facts;
  /// Side conditions that must hold for the claim to count as verified.
  bool side_conditions_hold = true;

  bool verified() const { return counterexamples.empty() && side_conditions_hold; }
  std::int64_t fact(const std::string& key, std::int64_t fallback = -1) const;
};

struct StratumTally {
  int size = 0;
  std::uint64_t scanned = 0;
  std::uint64_t witnesses = 0;
};

/// Result of the f(n) search: f(n) is one more than the largest size of a
/// nonbipartite order-n graph with no weakly pancyclic vertex.
struct ExtremalRecord {
  int n = 0;
  int f_value = 0;
  int b_value = 0;
  std::vector<std::string> witnesses;  // canonical graph6, size f_value - 1
  std::vector<StratumTally> strata;    // in scan order, largest size first
  std::int64_t elapsed_ms = 0;
};

/// Hamiltonian nonbipartite graphs of size >= b(n) are pancyclic. 5 <= n <= 9.
VerificationReport verify_hamiltonian_pancyclic(int n, const RunOptions& opts = {});
/// Nonbipartite graphs of size >= b(n) are weakly pancyclic with girth 3. 3 <= n <= 9.
VerificationReport verify_weakly_pancyclic(int n, const RunOptions& opts = {});
/// ... and have three weakly pancyclic vertices, except bt(n) with exactly two. 5 <= n <= 9.
VerificationReport verify_three_wp_vertices(int n, const RunOptions& opts = {});
/// gn(n): order n, size b(n), nonbipartite, not bt(n), exactly three weakly pancyclic vertices. 6 <= n <= 14.
VerificationReport verify_gn_family(int n);
/// Every longest cycle of a nonhamiltonian graph misses a small vertex. 3 <= n <= 8.
VerificationReport verify_longest_cycles(int n, const RunOptions& opts = {});
/// Path lengths in dense balanced bipartite graphs of order 2k, all classes. 2 <= k <= 4.
VerificationReport verify_bipartite_paths(int k, const RunOptions& opts = {});
/// Same property on random graphs K_{k,k} minus at most k-2 edges. 2 <= k <= 8.
VerificationReport verify_bipartite_paths_sampled(int k, std::uint64_t samples, std::uint64_t seed);
/// Hamiltonian nonbipartite graphs of size >= b(n) (bt(n) excluded for odd n)
/// without a pancyclic edge. Reported, not asserted. 7 <= n <= 9.
VerificationReport scan_pancyclic_edges(int n, const RunOptions& opts = {});

/// Descending-size scan for f(n). 3 <= n <= 10.
ExtremalRecord compute_f(int n, const RunOptions& opts = {});

/// Path-length conditions for one bipartite graph and one balanced bipartition:
/// odd lengths 3..2k-1 across the parts, even lengths 2..2k-2 within a part.
bool bipartite_paths_hold(const Graph& g, VertexSet part1, VertexSet part2, int k);

/// Vertex sets of all longest cycles (exhaustive DFS). Empty for acyclic graphs.
std::vector<VertexSet> longest_cycle_vertex_sets(const Graph& g);

}  // namespace wpc
