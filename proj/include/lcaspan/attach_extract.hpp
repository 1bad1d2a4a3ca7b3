#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcaspan/attach_spanner.hpp"
#include "lcaspan/probe.hpp"

namespace lcaspan {

/// Whole-graph evaluation of the attachment spanner rules. Computing
/// the highest-degree neighbor once per vertex answers every edge query
/// of the graph, so the kernel materializes H in O(sum of degrees) work
/// while chalking up, per query, exactly the probes the one-shot query
/// functions spend (the equivalence is unit-tested against them).
struct AttachExtract {
  std::vector<std::pair<VertexId, VertexId>> edges;  // H, sorted pairs
  std::vector<VertexId> hdn;                         // 1-based, 0 = none
  std::uint64_t queries = 0;                         // every parallel copy
  std::uint64_t probes_total = 0;
  std::uint64_t probes_max = 0;
  // degree-doubling census: vertices (excluding the global maximum)
  // whose kept neighbor doubles their degree or is the maximum itself
  std::uint64_t doubling_ok = 0;
  std::uint64_t doubling_total = 0;
  VertexId max_degree_vertex = 0;

  double probes_mean() const {
    return queries == 0 ? 0.0
                        : static_cast<double>(probes_total) /
                              static_cast<double>(queries);
  }
};

AttachExtract pa_extract(const MultiGraph& g, int n_threads = 0);
AttachExtract ua_extract(const MultiGraph& g, const UaParams& params,
                         int n_threads = 0);

}  // namespace lcaspan
