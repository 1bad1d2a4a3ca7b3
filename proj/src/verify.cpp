#include "lcaspan/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "lcaspan/lag_mis.hpp"
#include "lcaspan/parallel.hpp"

namespace lcaspan {

std::vector<std::int64_t> bfs_distances(const MultiGraph& g, VertexId src) {
  if (!g.valid_vertex(src)) {
    throw std::invalid_argument("bfs: source out of range");
  }
  std::vector<std::int64_t> dist(g.vertex_count() + 1, kUnreachable);
  std::vector<VertexId> frontier{src};
  dist[src] = 0;
  std::vector<VertexId> next;
  while (!frontier.empty()) {
    next.clear();
    for (const VertexId v : frontier) {
      for (const VertexId w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 1);
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (dist[v] == kUnreachable) return false;
  }
  return true;
}

bool is_tree(const MultiGraph& g) {
  return g.vertex_count() >= 1 &&
         g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

namespace {

std::pair<VertexId, VertexId> sample_pair(const RandomTape& tape, VertexId n,
                                          std::uint64_t t) {
  const auto u = static_cast<VertexId>(
      1 + tape.uniform_below({Dom::PairSample, t, 1}, n));
  auto v = static_cast<VertexId>(
      1 + tape.uniform_below({Dom::PairSample, t, 2}, n - 1));
  if (v >= u) ++v;
  return {u, v};
}

void check_subgraph(const MultiGraph& g, const MultiGraph& h) {
  if (h.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("stretch: vertex counts differ");
  }
  bool ok = true;
  h.for_each_pair([&](VertexId u, VertexId v, std::uint32_t) {
    if (!g.adjacent(u, v)) ok = false;
  });
  if (!ok) throw std::invalid_argument("stretch: H is not a subgraph of G");
}

StretchReport stretch_impl(const MultiGraph& g, const MultiGraph& h,
                           const RandomTape& tape, std::uint64_t pairs,
                           std::uint32_t ecc_sources, int n_threads) {
  check_subgraph(g, h);
  const VertexId n = g.vertex_count();
  StretchReport report;
  report.pairs_checked = pairs;
  if (n < 2) return report;

  double max_stretch = 0.0;
  std::uint64_t disconnected = 0;
  const int threads = resolve_threads(n_threads);

#pragma omp parallel for schedule(dynamic) num_threads(threads) \
    reduction(max : max_stretch) reduction(+ : disconnected)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(pairs); ++t) {
    const auto [u, v] = sample_pair(tape, n, static_cast<std::uint64_t>(t));
    const auto dg = bfs_distances(g, u)[v];
    if (dg == kUnreachable) continue;  // not a connected pair of G
    const auto dh = bfs_distances(h, u)[v];
    if (dh == kUnreachable) {
      ++disconnected;
      continue;
    }
    max_stretch = std::max(
        max_stretch, static_cast<double>(dh) / static_cast<double>(dg));
  }

  std::uint64_t max_ecc = 0;
  std::uint64_t unreachable = 0;
#pragma omp parallel for schedule(dynamic) num_threads(threads) \
    reduction(max : max_ecc) reduction(+ : unreachable)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(ecc_sources); ++s) {
    const auto src = static_cast<VertexId>(
        1 + tape.uniform_below(
                {Dom::PairSample, static_cast<std::uint64_t>(s), 3}, n));
    const auto dist = bfs_distances(h, src);
    for (VertexId v = 1; v <= n; ++v) {
      if (dist[v] == kUnreachable) {
        ++unreachable;
      } else {
        max_ecc = std::max(max_ecc, static_cast<std::uint64_t>(dist[v]));
      }
    }
  }

  report.max_stretch = max_stretch;
  report.disconnected_pairs = disconnected;
  report.max_ecc_h = max_ecc;
  report.unreachable_in_h = unreachable;
  return report;
}

}  // namespace

StretchReport sampled_stretch(const MultiGraph& g, const MultiGraph& h,
                              const RandomTape& tape, std::uint64_t pairs,
                              std::uint32_t ecc_sources, int n_threads) {
  return stretch_impl(g, h, tape, pairs, ecc_sources, n_threads);
}

StretchReport sampled_stretch_serial(const MultiGraph& g, const MultiGraph& h,
                                     const RandomTape& tape,
                                     std::uint64_t pairs,
                                     std::uint32_t ecc_sources) {
  return stretch_impl(g, h, tape, pairs, ecc_sources, 1);
}

bool is_mis(const MultiGraph& g, std::span<const VertexId> members) {
  const VertexId n = g.vertex_count();
  std::vector<std::uint8_t> in_set(n + 1, 0);
  for (const VertexId v : members) {
    if (v < 1 || v > n) return false;
    in_set[v] = 1;
  }
  for (VertexId v = 1; v <= n; ++v) {
    bool covered = false;
    for (const VertexId w : g.neighbors(v)) {
      if (in_set[w]) covered = true;
      if (in_set[v] && in_set[w]) return false;  // edge inside the set
    }
    if (!in_set[v] && !covered) return false;  // not maximal
  }
  return true;
}

std::vector<VertexId> greedy_mis(const MultiGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::uint8_t> in_set(n + 1, 0);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= n; ++v) {
    bool blocked = false;
    for (const VertexId w : g.neighbors(v)) {
      if (w == v || in_set[w]) {  // self-loops keep a vertex out
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      in_set[v] = 1;
      out.push_back(v);
    }
  }
  return out;
}

std::pair<MultiGraph, std::vector<VertexId>> realize_lag_graph(
    std::uint64_t seed, VertexId n, double p) {
  const RandomTape tape(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) {
      if (lag_query_edge(tape, n, p, a, b)) edges.emplace_back(a, b);
    }
  }
  return {MultiGraph::from_edges(n, edges), lag_compute_mis(tape, n, p)};
}

namespace {

Chi2Result chi2_impl(VertexId n, double p, std::uint64_t trials,
                     std::uint64_t base_seed, int n_threads) {
  const std::uint32_t pair_count = n * (n - 1) / 2;
  if (pair_count > 20) {
    throw std::invalid_argument("chi2: graph too large to enumerate");
  }
  const std::size_t cells = std::size_t{1} << pair_count;
  std::vector<std::uint64_t> counts(cells, 0);
  const int threads = resolve_threads(n_threads);

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      const RandomTape tape(base_seed + static_cast<std::uint64_t>(t));
      std::size_t code = 0;
      std::uint32_t bit = 0;
      for (VertexId a = 1; a <= n; ++a) {
        for (VertexId b = a + 1; b <= n; ++b, ++bit) {
          if (lag_query_edge(tape, n, p, a, b)) code |= std::size_t{1} << bit;
        }
      }
      ++local[code];
    }
#pragma omp critical
    for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
  }

  Chi2Result result;
  result.trials = trials;
  result.cells = std::move(counts);
  for (std::size_t c = 0; c < cells; ++c) {
    const auto k = static_cast<std::uint32_t>(std::popcount(c));
    const double prob = std::pow(p, k) * std::pow(1.0 - p, pair_count - k);
    const double expected = prob * static_cast<double>(trials);
    const double diff = static_cast<double>(result.cells[c]) - expected;
    result.statistic += diff * diff / expected;
  }
  return result;
}

}  // namespace

Chi2Result lag_uniformity_chi2(VertexId n, double p, std::uint64_t trials,
                               std::uint64_t base_seed, int n_threads) {
  return chi2_impl(n, p, trials, base_seed, n_threads);
}

Chi2Result lag_uniformity_chi2_serial(VertexId n, double p,
                                      std::uint64_t trials,
                                      std::uint64_t base_seed) {
  return chi2_impl(n, p, trials, base_seed, 1);
}

}  // namespace lcaspan
