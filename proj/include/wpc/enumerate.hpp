#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wpc/graph.hpp"

namespace wpc {

struct EnumFilter {
  int order = 0;
  int size_min = 0;
  int size_max = -1;  // negative: n(n-1)/2
  bool nonbipartite_only = false;
  bool connected_only = false;
};

/// Practical limit for exhaustive runs; the generator itself accepts any order.
inline constexpr int kMaxEnumOrder = 12;

/// Fills in a defaulted size_max and checks the bounds.
EnumFilter normalised(EnumFilter f);

using GraphVisitor = std::function<void(const Graph&)>;

/// Calls `visit` once per isomorphism class matching the filter, streaming
/// one representative of each. Graphs are generated by edge augmentation
/// with canonical deletion (a child is kept only if its new edge lies in
/// the orbit of its canonical edge, and each parent extends one non-edge
/// per automorphism orbit). Dense size ranges are generated through
/// complements. Single-threaded.
std::uint64_t enumerate(const EnumFilter& filter, const GraphVisitor& visit);

/// Class counts per edge count, for every size 0..n(n-1)/2.
std::map<int, std::uint64_t> count_by_size(int n);

/// Splits the generation tree into independent subtrees. The split depth
/// and the shard order depend only on the filter, so shard indices are
/// stable across runs and worker counts.
class ShardPlan {
 public:
  static constexpr std::size_t kDefaultTarget = 256;

  explicit ShardPlan(const EnumFilter& filter, std::size_t target_shards = kDefaultTarget);

  std::size_t size() const { return roots_.size() + (prefix_.empty() ? 0 : 1); }
  const EnumFilter& filter() const { return filter_; }

  /// Visits the classes of one shard; the union over all shards is exactly
  /// what enumerate() visits.
  std::uint64_t run(std::size_t shard, const GraphVisitor& visit) const;

 private:
  EnumFilter filter_;
  bool complement_ = false;
  int lo_ = 0, hi_ = 0;  // size bounds in the generation space
  std::vector<Graph> prefix_;  // matching classes above the split depth
  std::vector<Graph> roots_;   // subtree roots at the split depth
};

}  // namespace wpc
