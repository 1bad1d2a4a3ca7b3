#pragma once

#include "lcaspan/probe.hpp"
#include "lcaspan/tape.hpp"

namespace lcaspan {

// Probe strategy for the non-center side of a query:
//   Sorted     one Nbr(u,1) probe (needs a sorted adjacency oracle)
//   ScanNbr    walk u's adjacency list with Nbr probes
//   ScanExists probe Exists(u,1), Exists(u,2), ... through the centers
enum class ErMode { Sorted, ScanNbr, ScanExists };

struct ErSpannerParams {
  VertexId n;
  double delta;  // expected degree np = n^delta
  VertexId T;    // center threshold: centers are ids 1..T
  ErMode mode;

  static ErSpannerParams make(VertexId n, double delta,
                              ErMode mode = ErMode::Sorted);
  double edge_probability() const;  // n^(delta-1)
};

VertexId er_center_threshold(VertexId n, double delta);
double er_delta_from_p(VertexId n, double p);

inline bool er_is_center(VertexId v, const ErSpannerParams& params) {
  return v <= params.T;
}

/// Picks the cheaper scanning strategy for unsorted adjacency access.
ErMode er_auto_mode(VertexId n, double delta, bool sorted_adjacency);

/// Membership of the edge {u,v} in the center spanner: center-center
/// edges are always kept, and a non-center keeps only the edge to its
/// minimum-id center neighbor. Symmetric in (u,v); identical answers in
/// every mode. Throws NotAnEdgeError when {u,v} is not in G.
bool er_spanner_query(Prober& pr, const ErSpannerParams& params, VertexId u,
                      VertexId v);

/// Connectivity threshold (2+eps) ln(n)/n with eps = 0.5.
double er_baseline_p0(VertexId n);

/// Keeps each edge with probability min(p0/p, 1): one tape draw keyed by
/// the unordered pair, plus the single membership probe.
bool er_baseline_subsample_query(Prober& pr, const RandomTape& tape,
                                 VertexId n, double p, VertexId u, VertexId v);

/// Each endpoint selects two of its adjacency positions off the tape
/// (all of them when deg <= 2); the edge is kept if either side selected
/// it. The selection depends only on (seed, endpoint, degree).
bool er_baseline_two_edges_query(Prober& pr, const RandomTape& tape,
                                 VertexId u, VertexId v);

}  // namespace lcaspan
