#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/tape.hpp"

namespace lcaspan {

constexpr std::int64_t kUnreachable = -1;

/// Exact unweighted distances from src; unreachable vertices get -1.
std::vector<std::int64_t> bfs_distances(const MultiGraph& g, VertexId src);

bool is_connected(const MultiGraph& g);
bool is_tree(const MultiGraph& g);

struct StretchReport {
  std::uint64_t pairs_checked = 0;
  double max_stretch = 0.0;  // over pairs connected in both graphs
  std::uint64_t max_ecc_h = 0;  // max finite distance seen in H
  std::uint64_t disconnected_pairs = 0;
  std::uint64_t unreachable_in_h = 0;  // vertices unreachable from sources
};

/// Distance distortion of H against G over `pairs` tape-sampled
/// G-connected pairs, plus full eccentricity sweeps from `ecc_sources`
/// sampled sources. Requires H to be a subgraph of G (checked).
/// Deterministic for a fixed tape; parallel over pairs.
StretchReport sampled_stretch(const MultiGraph& g, const MultiGraph& h,
                              const RandomTape& tape, std::uint64_t pairs,
                              std::uint32_t ecc_sources = 4,
                              int n_threads = 0);
StretchReport sampled_stretch_serial(const MultiGraph& g, const MultiGraph& h,
                                     const RandomTape& tape,
                                     std::uint64_t pairs,
                                     std::uint32_t ecc_sources = 4);

/// True when S is independent in g and every vertex outside S has a
/// neighbor inside it. Self-loops disqualify their vertex from S.
bool is_mis(const MultiGraph& g, std::span<const VertexId> members);

/// Lowest-index greedy maximal independent set.
std::vector<VertexId> greedy_mis(const MultiGraph& g);

/// Drives the joint generator over every pair and materializes the
/// sampled graph together with its independent set.
std::pair<MultiGraph, std::vector<VertexId>> realize_lag_graph(
    std::uint64_t seed, VertexId n, double p);

struct Chi2Result {
  double statistic = 0.0;
  std::vector<std::uint64_t> cells;
  std::uint64_t trials = 0;
};

/// Chi-square statistic of the generator's n=4 graph marginal against
/// the uniform 64-cell law (valid at p = 0.5), over `trials` seeds
/// starting at base_seed. Parallel over seeds.
Chi2Result lag_uniformity_chi2(VertexId n, double p, std::uint64_t trials,
                               std::uint64_t base_seed, int n_threads = 0);
Chi2Result lag_uniformity_chi2_serial(VertexId n, double p,
                                      std::uint64_t trials,
                                      std::uint64_t base_seed);

}  // namespace lcaspan
