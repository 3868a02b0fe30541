#include "wpc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include "checkpoint.hpp"
#include "wpc/canon.hpp"
#include "wpc/constructions.hpp"
#include "wpc/enumerate.hpp"
#include "wpc/parallel.hpp"
#include "wpc/spectrum.hpp"

namespace wpc {
namespace {

using Clock = std::chrono::steady_clock;

void require_range(const char* claim, const char* var, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(claim) + " is checked for " + std::to_string(lo) + " <= " + var +
                                " <= " + std::to_string(hi) + ", got " + std::to_string(value));
  }
}

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string canonical_g6(const Graph& g) { return canonical_form(g).bytes(); }

void sort_canonical(std::vector<std::string>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

// Per-shard accumulator for the sweeps.
struct Tally {
  std::uint64_t scanned = 0;
  std::uint64_t in_hypothesis = 0;
  std::vector<std::string> bad;
  std::map<std::string, std::int64_t> sums;
};

template <class Check>
Tally sweep(const EnumFilter& filter, const RunOptions& opts, Check&& check) {
  const ShardPlan plan(filter);
  auto parts = map_shards<Tally>(plan, opts.jobs, [&](std::size_t shard, Tally& t) {
    plan.run(shard, [&](const Graph& g) {
      ++t.scanned;
      check(g, t);
    });
  });
  Tally total;
  for (auto& p : parts) {
    total.scanned += p.scanned;
    total.in_hypothesis += p.in_hypothesis;
    total.bad.insert(total.bad.end(), p.bad.begin(), p.bad.end());
    for (const auto& [k, v] : p.sums) total.sums[k] += v;
  }
  sort_canonical(total.bad);
  return total;
}

VerificationReport make_report(std::string claim, int n, Tally&& t, Clock::time_point start) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.n = n;
  r.scanned = t.scanned;
  r.in_hypothesis = t.in_hypothesis;
  r.counterexamples = std::move(t.bad);
  r.elapsed_ms = millis_since(start);
  return r;
}

bool weakly_pancyclic_graph(LengthSet all) {
  return !all.empty() && all.covers(*all.min(), *all.max());
}

// Cycles are rooted at their least vertex; each vertex set is reported once.
void collect_cycles_of_length(const Graph& g, int len, std::set<VertexSet>& out) {
  const int n = g.order();
  for (int root = 0; root + len <= n; ++root) {
    const VertexSet allowed = g.vertices() & ~(vertex_bit(root + 1) - 1);
    auto dfs = [&](auto&& self, int v, VertexSet used, int count) -> void {
      if (count == len) {
        if (g.adjacent(v, root)) out.insert(used);
        return;
      }
      for (VertexSet nb = g.row(v) & allowed & ~used; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        self(self, w, used | vertex_bit(w), count + 1);
      }
    };
    dfs(dfs, root, vertex_bit(root), 1);
  }
}

}  // namespace

std::int64_t VerificationReport::fact(const std::string& key, std::int64_t fallback) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return v;
  }
  return fallback;
}

VerificationReport verify_hamiltonian_pancyclic(int n, const RunOptions& opts) {
  require_range("thm1", "n", n, 5, 9);
  const auto start = Clock::now();
  auto t = sweep({.order = n, .size_min = b_threshold(n), .nonbipartite_only = true}, opts,
                 [&](const Graph& g, Tally& acc) {
                   const LengthSet all = graph_cycle_lengths(g);
                   if (!all.contains(n)) return;
                   ++acc.in_hypothesis;
                   if (!all.covers(3, n)) acc.bad.push_back(canonical_g6(g));
                 });
  return make_report("thm1", n, std::move(t), start);
}

VerificationReport verify_weakly_pancyclic(int n, const RunOptions& opts) {
  require_range("thm2", "n", n, 3, 9);
  const auto start = Clock::now();
  auto t = sweep({.order = n, .size_min = b_threshold(n), .nonbipartite_only = true}, opts,
                 [&](const Graph& g, Tally& acc) {
                   ++acc.in_hypothesis;
                   const LengthSet all = graph_cycle_lengths(g);
                   const bool girth3 = all.contains(3);
                   acc.sums["girth3"] += girth3;
                   if (!weakly_pancyclic_graph(all) || !girth3) acc.bad.push_back(canonical_g6(g));
                 });
  const std::int64_t girth3 = t.sums["girth3"];
  auto r = make_report("thm2", n, std::move(t), start);
  r.facts = {{"girth3_graphs", girth3}};
  return r;
}

VerificationReport verify_three_wp_vertices(int n, const RunOptions& opts) {
  require_range("thm3", "n", n, 5, 9);
  const auto start = Clock::now();
  const Graph exception = bt(n);
  auto t = sweep({.order = n, .size_min = b_threshold(n), .nonbipartite_only = true}, opts,
                 [&](const Graph& g, Tally& acc) {
                   ++acc.in_hypothesis;
                   const int wp = set_size(classify_pancyclicity(g).weakly_pancyclic_vertices);
                   if (are_isomorphic(g, exception)) {
                     acc.sums["bt_found"] += 1;
                     acc.sums["bt_wp_vertices"] = wp;
                     if (wp != 2) acc.bad.push_back(canonical_g6(g));
                   } else if (wp < 3) {
                     acc.bad.push_back(canonical_g6(g));
                   }
                 });
  const std::int64_t found = t.sums["bt_found"];
  const std::int64_t bt_wp = found ? t.sums["bt_wp_vertices"] : -1;
  auto r = make_report("thm3", n, std::move(t), start);
  r.facts = {{"bt_found", found}, {"bt_wp_vertices", bt_wp}};
  r.side_conditions_hold = found == 1 && bt_wp == 2;
  return r;
}

VerificationReport verify_gn_family(int n) {
  require_range("thm4", "n", n, 6, 14);
  const auto start = Clock::now();
  const Graph g = gn(n);
  const int wp = set_size(classify_pancyclicity(g).weakly_pancyclic_vertices);
  const bool nonbipartite = !is_bipartite(g);
  const bool differs = !are_isomorphic(g, bt(n));
  const bool ok = g.order() == n && g.size() == b_threshold(n) && nonbipartite && differs && wp == 3;
  Tally t;
  t.scanned = t.in_hypothesis = 1;
  if (!ok) t.bad.push_back(to_graph6(g));
  auto r = make_report("thm4", n, std::move(t), start);
  r.facts = {{"order", g.order()},
             {"size", g.size()},
             {"b", b_threshold(n)},
             {"nonbipartite", nonbipartite},
             {"not_isomorphic_to_bt", differs},
             {"wp_vertices", wp}};
  return r;
}

std::vector<VertexSet> longest_cycle_vertex_sets(const Graph& g) {
  const LengthSet all = graph_cycle_lengths(g);
  if (all.empty()) return {};
  std::set<VertexSet> sets;
  collect_cycles_of_length(g, *all.max(), sets);
  return {sets.begin(), sets.end()};
}

VerificationReport verify_longest_cycles(int n, const RunOptions& opts) {
  require_range("lemma5", "n", n, 3, 8);
  const auto start = Clock::now();
  auto t = sweep({.order = n}, opts, [&](const Graph& g, Tally& acc) {
    const LengthSet all = graph_cycle_lengths(g);
    if (all.empty() || all.contains(n)) return;
    ++acc.in_hypothesis;
    const VertexSet small = classify_vertices(g).small;
    const auto longest = longest_cycle_vertex_sets(g);
    acc.sums["longest_cycles"] += static_cast<std::int64_t>(longest.size());
    for (VertexSet cycle : longest) {
      if ((small & ~cycle) == 0) {
        acc.bad.push_back(canonical_g6(g));
        break;
      }
    }
  });
  const std::int64_t cycles = t.sums["longest_cycles"];
  auto r = make_report("lemma5", n, std::move(t), start);
  r.facts = {{"longest_cycles_checked", cycles}};
  return r;
}

bool bipartite_paths_hold(const Graph& g, VertexSet part1, VertexSet part2, int k) {
  LengthSet odd, even;
  for (int l = 2; l <= k; ++l) odd.insert(2 * l - 1);
  for (int l = 1; l <= k - 1; ++l) even.insert(2 * l);
  for (int u = 0; u < g.order(); ++u) {
    const auto paths = path_lengths_from(g, u);
    const VertexSet own = (part1 >> u) & 1u ? part1 : part2;
    for (int w = 0; w < g.order(); ++w) {
      if (w == u) continue;
      const LengthSet need = (own >> w) & 1u ? even : odd;
      if (!paths[w].includes(need)) return false;
    }
  }
  return true;
}

namespace {

// All bipartitions with parts of size k, one per choice of side in every component.
std::vector<std::pair<VertexSet, VertexSet>> balanced_bipartitions(const Graph& g, int k) {
  const auto bp = bipartition(g);
  if (!bp) return {};
  std::vector<std::pair<VertexSet, VertexSet>> comps;
  for (VertexSet left = g.vertices(); left;) {
    const VertexSet c = component_of(g, std::countr_zero(left));
    comps.emplace_back(c & bp->part1, c & bp->part2);
    left &= ~c;
  }
  std::vector<std::pair<VertexSet, VertexSet>> out;
  const std::size_t choices = std::size_t{1} << (comps.size() - 1);
  for (std::size_t mask = 0; mask < choices; ++mask) {
    VertexSet a = comps[0].first, b = comps[0].second;
    for (std::size_t i = 1; i < comps.size(); ++i) {
      const bool flip = (mask >> (i - 1)) & 1u;
      a |= flip ? comps[i].second : comps[i].first;
      b |= flip ? comps[i].first : comps[i].second;
    }
    if (set_size(a) == k) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

VerificationReport verify_bipartite_paths(int k, const RunOptions& opts) {
  require_range("lemma7", "k", k, 2, 4);
  const auto start = Clock::now();
  auto t = sweep({.order = 2 * k, .size_min = k * k - k + 2}, opts, [&](const Graph& g, Tally& acc) {
    const auto parts = balanced_bipartitions(g, k);
    if (parts.empty()) return;
    ++acc.in_hypothesis;
    for (const auto& [a, b] : parts) {
      if (!bipartite_paths_hold(g, a, b, k)) {
        acc.bad.push_back(canonical_g6(g));
        break;
      }
    }
  });
  return make_report("lemma7", k, std::move(t), start);
}

VerificationReport verify_bipartite_paths_sampled(int k, std::uint64_t samples, std::uint64_t seed) {
  require_range("lemma7 sampling", "k", k, 2, 8);
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::vector<Edge> cross;
  for (int a = 0; a < k; ++a) {
    for (int b = k; b < 2 * k; ++b) cross.push_back({a, b});
  }
  const VertexSet part1 = all_vertices(k), part2 = all_vertices(2 * k) & ~part1;
  std::uniform_int_distribution<int> missing(0, k - 2);
  Tally t;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::shuffle(cross.begin(), cross.end(), rng);
    const auto drop = static_cast<std::size_t>(missing(rng));
    const Graph g = Graph::from_edges(2 * k, std::span<const Edge>(cross.data() + drop, cross.size() - drop));
    ++t.scanned;
    ++t.in_hypothesis;
    if (!bipartite_paths_hold(g, part1, part2, k)) t.bad.push_back(canonical_g6(g));
  }
  sort_canonical(t.bad);
  auto r = make_report("lemma7", k, std::move(t), start);
  r.facts = {{"sampled", 1}, {"seed", static_cast<std::int64_t>(seed)}};
  return r;
}

VerificationReport scan_pancyclic_edges(int n, const RunOptions& opts) {
  require_range("conjecture pancyclic-edge", "n", n, 7, 9);
  const auto start = Clock::now();
  const Graph exception = bt(n);
  auto t = sweep({.order = n, .size_min = b_threshold(n), .nonbipartite_only = true}, opts,
                 [&](const Graph& g, Tally& acc) {
                   if (!is_hamiltonian(g)) return;
                   if (n % 2 == 1 && are_isomorphic(g, exception)) {
                     acc.sums["bt_excluded"] += 1;
                     return;
                   }
                   ++acc.in_hypothesis;
                   const auto rep = classify_pancyclicity(g);
                   if (rep.pancyclic_edges.empty()) {
                     acc.bad.push_back(canonical_g6(g));
                     return;
                   }
                   acc.sums["with_pancyclic_edge"] += 1;
                   bool endpoints_ok = set_size(rep.pancyclic_vertices) >= 2;
                   for (const auto& e : rep.pancyclic_edges) {
                     endpoints_ok = endpoints_ok && ((rep.pancyclic_vertices >> e.u) & 1u) &&
                                    ((rep.pancyclic_vertices >> e.v) & 1u);
                   }
                   if (!endpoints_ok) acc.sums["endpoint_violations"] += 1;
                 });
  const std::int64_t excluded = t.sums["bt_excluded"];
  const std::int64_t with_edge = t.sums["with_pancyclic_edge"];
  const std::int64_t violations = t.sums["endpoint_violations"];
  auto r = make_report("conjecture-pancyclic-edge", n, std::move(t), start);
  r.asserted = false;
  r.facts = {{"bt_excluded", excluded}, {"with_pancyclic_edge", with_edge}, {"endpoint_violations", violations}};
  r.side_conditions_hold = violations == 0;
  return r;
}

ExtremalRecord compute_f(int n, const RunOptions& opts) {
  if (n < 3) throw std::invalid_argument("no nonbipartite graph of order " + std::to_string(n) + " exists");
  require_range("search-f", "n", n, 3, 10);
  const auto start = Clock::now();
  std::optional<detail::CheckpointStore> store;
  if (!opts.resume_dir.empty()) store.emplace(opts.resume_dir);

  ExtremalRecord rec;
  rec.n = n;
  rec.b_value = b_threshold(n);
  int witness_size = 2;  // no nonbipartite graph has fewer than 3 edges
  for (int m = n * (n - 1) / 2; m >= 3; --m) {
    const ShardPlan plan({.order = n, .size_min = m, .size_max = m, .nonbipartite_only = true});
    auto parts = map_shards<detail::ShardRecord>(plan, opts.jobs, [&](std::size_t shard, detail::ShardRecord& out) {
      if (store) {
        if (auto done = store->load(n, m, shard, plan.size())) {
          out = std::move(*done);
          return;
        }
      }
      plan.run(shard, [&](const Graph& g) {
        ++out.scanned;
        if (!has_weakly_pancyclic_vertex(g)) out.witnesses.push_back(canonical_g6(g));
      });
      if (store) store->save(n, m, shard, plan.size(), out);
    });
    StratumTally tally{.size = m};
    std::vector<std::string> found;
    for (auto& p : parts) {
      tally.scanned += p.scanned;
      found.insert(found.end(), p.witnesses.begin(), p.witnesses.end());
    }
    sort_canonical(found);
    tally.witnesses = found.size();
    rec.strata.push_back(tally);
    if (opts.progress) {
      *opts.progress << "search-f n=" << n << " size=" << m << ": " << tally.scanned << " nonbipartite classes, "
                     << tally.witnesses << " without a weakly pancyclic vertex (" << millis_since(start)
                     << " ms)\n";
    }
    if (!found.empty()) {
      witness_size = m;
      rec.witnesses = std::move(found);
      break;
    }
  }
  for (const auto& s : rec.strata) {
    if (s.size > witness_size && s.witnesses != 0) throw std::logic_error("descending f(n) scan is not monotone");
  }
  for (const auto& w : rec.witnesses) {
    const Graph g = from_graph6(w);
    if (g.size() != witness_size || is_bipartite(g) || classify_pancyclicity(g).weakly_pancyclic_vertices != 0) {
      throw std::logic_error("f(n) witness " + w + " fails its re-check");
    }
  }
  rec.f_value = witness_size + 1;
  rec.elapsed_ms = millis_since(start);
  return rec;
}

}  // namespace wpc
