#include "lcaspan/er_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcaspan/errors.hpp"

namespace lcaspan {

VertexId er_center_threshold(VertexId n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("er spanner: delta outside (0,1)");
  }
  const double exponent = 1.0 - delta / 2.0 - delta * delta / 8.0;
  const double t = std::floor(std::pow(static_cast<double>(n), exponent));
  return static_cast<VertexId>(std::clamp(t, 1.0, static_cast<double>(n)));
}

double er_delta_from_p(VertexId n, double p) {
  if (n < 2 || !(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("er spanner: cannot derive delta");
  }
  return std::log(p * n) / std::log(static_cast<double>(n));
}

ErSpannerParams ErSpannerParams::make(VertexId n, double delta, ErMode mode) {
  return {n, delta, er_center_threshold(n, delta), mode};
}

double ErSpannerParams::edge_probability() const {
  return std::pow(static_cast<double>(n), delta - 1.0);
}

ErMode er_auto_mode([[maybe_unused]] VertexId n, double delta,
                    bool sorted_adjacency) {
  if (sorted_adjacency) return ErMode::Sorted;
  // expected degree n^delta vs. center count ~ n^(1-delta) exists-scans
  return delta <= 0.5 ? ErMode::ScanNbr : ErMode::ScanExists;
}

namespace {

// Minimum-id center neighbor of the non-center u, or 0 if none.
VertexId min_center_neighbor(Prober& pr, const ErSpannerParams& params,
                             VertexId u) {
  switch (params.mode) {
    case ErMode::Sorted: {
      // first neighbor of a sorted row is the minimum; if it is not a
      // center, no neighbor is
      const VertexId w = pr.nbr(u, 1);
      return (w != 0 && w <= params.T) ? w : 0;
    }
    case ErMode::ScanNbr: {
      const std::uint64_t d = pr.deg(u);
      VertexId best = 0;
      for (std::uint64_t i = 1; i <= d; ++i) {
        const VertexId w = pr.nbr(u, i);
        if (w != 0 && w <= params.T && (best == 0 || w < best)) best = w;
      }
      return best;
    }
    case ErMode::ScanExists: {
      for (VertexId c = 1; c <= params.T; ++c) {
        if (pr.exists(u, c)) return c;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace

bool er_spanner_query(Prober& pr, const ErSpannerParams& params, VertexId u,
                      VertexId v) {
  if (!pr.exists(u, v)) throw NotAnEdgeError("er spanner: pair not in G");
  const bool uc = er_is_center(u, params);
  const bool vc = er_is_center(v, params);
  if (uc && vc) return true;
  if (!uc && !vc) return false;
  const VertexId outside = uc ? v : u;
  const VertexId center = uc ? u : v;
  return min_center_neighbor(pr, params, outside) == center;
}

double er_baseline_p0(VertexId n) {
  if (n < 2) throw std::invalid_argument("er baseline: n too small");
  return 2.5 * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

bool er_baseline_subsample_query(Prober& pr, const RandomTape& tape,
                                 VertexId n, double p, VertexId u,
                                 VertexId v) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("er baseline: p outside (0,1]");
  }
  if (!pr.exists(u, v)) throw NotAnEdgeError("er baseline: pair not in G");
  const double keep = std::min(er_baseline_p0(n) / p, 1.0);
  return tape.coin({Dom::EdgeKeep, std::min(u, v), std::max(u, v)}, keep);
}

namespace {

// Whether position `target` (1-based) is one of the two tape-selected
// positions for this endpoint; every position is selected when d <= 2.
bool position_selected(const RandomTape& tape, VertexId endpoint,
                       std::uint64_t d, std::uint64_t target) {
  if (d <= 2) return true;
  const std::uint64_t first =
      1 + tape.uniform_below({Dom::TwoEdges, endpoint, d, 1}, d);
  std::uint64_t second =
      1 + tape.uniform_below({Dom::TwoEdges, endpoint, d, 2}, d - 1);
  if (second >= first) ++second;  // skip the first pick: without replacement
  return target == first || target == second;
}

}  // namespace

bool er_baseline_two_edges_query(Prober& pr, const RandomTape& tape,
                                 VertexId u, VertexId v) {
  if (!pr.exists(u, v)) throw NotAnEdgeError("er baseline: pair not in G");
  for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    const std::uint64_t d = pr.deg(a);
    for (std::uint64_t i = 1; i <= d; ++i) {
      if (pr.nbr(a, i) == b) {
        if (position_selected(tape, a, d, i)) return true;
        break;  // simple graph: b occupies exactly one position of a
      }
    }
  }
  return false;
}

}  // namespace lcaspan
