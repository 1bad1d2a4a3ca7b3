#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/parallel.hpp"
#include "lcaspan/probe.hpp"

namespace lcaspan {

struct ExtractReport {
  std::vector<std::pair<VertexId, VertexId>> edges;  // kept pairs, sorted
  std::uint64_t queries = 0;
  std::uint64_t probes_total = 0;
  std::uint64_t probes_max = 0;  // over single queries

  double probes_mean() const {
    return queries == 0 ? 0.0
                        : static_cast<double>(probes_total) /
                              static_cast<double>(queries);
  }
};

/// Evaluates a per-edge membership predicate over every parallel copy of
/// every edge of the oracle's graph and collects the kept pairs. Each
/// worker holds its own Prober, so probe counters never contend; the
/// final edge list and probe tallies are independent of the schedule.
///
/// Pred signature: bool(Prober&, VertexId u, VertexId v, uint32_t index)
/// with u <= v and index running over the pair's parallel copies.
template <class Pred>
ExtractReport extract_subgraph(const ProbeOracle& oracle, Pred pred,
                               int n_threads = 0) {
  const MultiGraph& g = oracle.graph();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int threads = resolve_threads(n_threads);

  ExtractReport out;
  std::uint64_t queries = 0, probes_total = 0, probes_max = 0;
  std::vector<std::vector<std::pair<VertexId, VertexId>>> buckets(
      static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads) \
    reduction(+ : queries, probes_total) reduction(max : probes_max)
  {
#ifdef _OPENMP
    auto& kept = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& kept = buckets.front();
#endif
    Prober pr(oracle);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t row = 1; row <= n; ++row) {
      const auto u = static_cast<VertexId>(row);
      const auto nbrs = g.neighbors(u);
      std::size_t i = 0;
      while (i < nbrs.size()) {
        const VertexId w = nbrs[i];
        std::size_t j = i;
        while (j < nbrs.size() && nbrs[j] == w) ++j;
        auto mult = static_cast<std::uint32_t>(j - i);
        if (w == u) mult /= 2;
        if (w >= u) {
          for (std::uint32_t copy = 1; copy <= mult; ++copy) {
            const std::uint64_t before = pr.stats.total();
            const bool keep = pred(pr, u, w, copy);
            const std::uint64_t cost = pr.stats.total() - before;
            ++queries;
            probes_total += cost;
            probes_max = std::max(probes_max, cost);
            if (keep) kept.emplace_back(u, w);
          }
        }
        i = j;
      }
    }
  }

  for (auto& b : buckets) {
    out.edges.insert(out.edges.end(), b.begin(), b.end());
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  out.queries = queries;
  out.probes_total = probes_total;
  out.probes_max = probes_max;
  return out;
}

template <class Pred>
ExtractReport extract_subgraph_serial(const ProbeOracle& oracle, Pred pred) {
  return extract_subgraph(oracle, std::move(pred), 1);
}

}  // namespace lcaspan
