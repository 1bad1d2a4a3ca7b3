#pragma once

#include <cstdint>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/probe.hpp"

namespace lcaspan {

/// k-th harmonic number, accumulated in extended precision. k >= 1.
double harmonic(std::uint64_t k);

struct UaParams {
  VertexId n;
  std::uint32_t mu;
  double threshold;  // D = mu (H_{n-1} - H_6) + mu/2
  double ladder_depth;               // M
  std::vector<double> center_sizes;  // |C_m| for m = 1..ceil(M)

  static UaParams make(VertexId n, std::uint32_t mu);
};

/// Degree threshold D above which both endpoints keep the edge outright.
double ua_threshold(VertexId n, std::uint32_t mu);

/// lambda_c = mu (H_{n-1} - H_{c-1}); expected later-arrival degree mass
/// of the c-th arrival.
double ua_lambda(VertexId n, std::uint32_t mu, std::uint64_t c);

/// Alternative threshold anchored at the m-th intermediate center
/// (slightly more edges kept, slightly less local work).
double ua_center_threshold(const UaParams& params, std::uint32_t m);

/// Maximum-degree distinct neighbor of v, ties to the smallest id;
/// 0 when v has no neighbor besides itself. Costs one Deg probe, a full
/// Nbr scan of v, and one Deg probe per distinct neighbor.
VertexId highest_degree_neighbor(Prober& pr, VertexId v);

/// Preferential-attachment rule: keep the first parallel copy of {u,v}
/// when one endpoint is the other's highest-degree neighbor. Self-loops
/// are never kept.
bool pa_query(Prober& pr, const EdgeRef& e);

/// Uniform-attachment rule: first copy only; kept outright when both
/// degrees exceed the threshold (exactly two Deg probes), otherwise by
/// the highest-degree-neighbor rule.
bool ua_query(Prober& pr, const UaParams& params, const EdgeRef& e);

/// Arrival-time variant: the later endpoint keeps exactly its first
/// drawn edge. Needs arrival metadata and draw labels on the graph.
bool ua_arrival_query(const MultiGraph& g, const EdgeRef& e);

struct UaRootResult {
  std::vector<VertexId> members;  // the found vertex and its heavy neighbors
  std::uint32_t walk_length = 0;
};

/// Follows highest-degree neighbors from `start` until the degree
/// clears mu H_{n-1} - mu/2, then returns that vertex together with all
/// its neighbors above the same mark. Throws RegimeViolationError if the
/// walk cycles or dead-ends before reaching the mark.
UaRootResult ua_root_find(Prober& pr, const UaParams& params, VertexId start);

}  // namespace lcaspan
