#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/probe.hpp"
#include "lcaspan/tape.hpp"

namespace lcaspan {

struct SssParams {
  VertexId n;
  double p;       // edge probability of the input graph, >= p_star
  double p_star;  // 7 ln(n) / n

  static SssParams make(VertexId n, double p);
  double keep_probability() const;  // min(p_star / p, 1)
};

/// Pre-sparsification coin for the unordered pair {u,v}; defines G'.
bool sss_in_subsample(const RandomTape& tape, const SssParams& params,
                      VertexId u, VertexId v);

enum class SssRole : std::uint8_t { NonCandidate, Candidate, Leader };

/// Global pass over the whole graph: runs the four rounds on the
/// subsampled graph G' and records the full outcome. Reference
/// implementation kept for equivalence testing against sss_query.
struct SssReference {
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, sorted, unique
  std::vector<SssRole> role;                         // 1-based
  std::vector<std::uint8_t> admin;                   // 1-based flags
  std::uint64_t candidate_count = 0;
  std::uint64_t leader_count = 0;
  std::uint64_t admin_count = 0;
  // raw per-round contributions, before deduplication
  std::uint64_t round2_edges = 0;
  std::uint64_t round3_edges = 0;
  std::uint64_t round4_edges = 0;

  bool contains(VertexId u, VertexId v) const;
};

SssReference sss_reference(const MultiGraph& g, const RandomTape& tape,
                           const SssParams& params);

/// Membership of {u,v} in the sparsified subgraph, decided from probes
/// alone: drops the edge if pre-sparsification removed it, otherwise
/// explores the radius-3 ball around the endpoints in G' (scanning full
/// adjacency rows and pruning non-subsampled entries at each frontier)
/// and replays the four rounds inside the ball. Agrees with
/// sss_reference on every edge. Throws NotAnEdgeError if {u,v} is not
/// in G.
bool sss_query(Prober& pr, const RandomTape& tape, const SssParams& params,
               VertexId u, VertexId v);

}  // namespace lcaspan
