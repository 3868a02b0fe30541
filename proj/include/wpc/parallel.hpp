#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <vector>

#include "wpc/enumerate.hpp"

namespace wpc {

inline int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

/// Runs `fn(shard_index, result)` for every shard of `plan` on up to `jobs`
/// OpenMP threads and returns the per-shard results in shard order, so the
/// merged outcome does not depend on scheduling.
template <class Result, class Fn>
std::vector<Result> map_shards(const ShardPlan& plan, int jobs, Fn&& fn) {
  const auto count = static_cast<long>(plan.size());
  std::vector<Result> results(plan.size());
  std::vector<std::exception_ptr> errors(plan.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i), results[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Serial reference for map_shards: same results, one shard after another.
template <class Result, class Fn>
std::vector<Result> map_shards_serial(const ShardPlan& plan, Fn&& fn) {
  std::vector<Result> results(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) fn(i, results[i]);
  return results;
}

}  // namespace wpc
