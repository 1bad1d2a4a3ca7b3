#pragma once

#include <cstdint>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/tape.hpp"

namespace lcaspan {

/// Tape-draw accounting for the generator's work bound.
struct LagStats {
  std::uint64_t tape_evals = 0;
};

/// Members of the jointly sampled maximal independent set, ascending,
/// always starting at vertex 1. Recomputed from the tape on every call:
/// the generator keeps no state between queries. p in (0,1]; p = 1 is
/// the complete-graph limit M = {1}.
std::vector<VertexId> lag_compute_mis(const RandomTape& tape, VertexId n,
                                      double p, LagStats* stats = nullptr);

/// Whether vertex a belongs to the sampled independent set.
bool lag_query_mis(const RandomTape& tape, VertexId n, double p, VertexId a,
                   LagStats* stats = nullptr);

/// Whether the edge {a,b} is present in the sampled graph, consistent
/// across any query order:
///   - both endpoints in M: absent;
///   - neither in M: a fresh pair-keyed coin with probability p;
///   - one endpoint v_j in M, the other b strictly after v_i (the last
///     member before b): pair-keyed coin when j > i, otherwise the
///     answer comes from b's conditioned row - edges (v_1,b)..(v_i,b)
///     resampled in rounds keyed only by (b, round, slot) until a round
///     has at least one success. Throws RetryExhaustedError after
///     ceil(40 ln(n)/p) rounds.
bool lag_query_edge(const RandomTape& tape, VertexId n, double p, VertexId a,
                    VertexId b, LagStats* stats = nullptr);

std::uint64_t lag_retry_cap(VertexId n, double p);

}  // namespace lcaspan
