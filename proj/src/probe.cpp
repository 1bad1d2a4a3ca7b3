#include "lcaspan/probe.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lcaspan {

ProbeOracle::ProbeOracle(const MultiGraph& g, AdjacencyOrder order,
                         std::uint64_t shuffle_seed)
    : g_(&g), sorted_(order == AdjacencyOrder::Sorted) {
  if (sorted_) return;  // graph rows are already sorted; zero-copy view

  const RandomTape tape(shuffle_seed);
  const VertexId n = g.vertex_count();
  view_.resize(g.degree_sum());
  fresh_.assign(g.degree_sum(), 0);
  view_off_.assign(n + 2, 0);
  std::uint64_t base = 0;
  for (VertexId v = 1; v <= n; ++v) {
    view_off_[v] = base;
    const auto row = g.neighbors(v);
    const auto d = static_cast<std::uint64_t>(row.size());
    std::copy(row.begin(), row.end(), view_.begin() + base);
    for (std::uint64_t i = d; i >= 2; --i) {
      const std::uint64_t j =
          tape.uniform_below({Dom::AdjShuffle, v, i}, i);
      std::swap(view_[base + i - 1], view_[base + j]);
    }
    std::unordered_set<VertexId> seen;
    seen.reserve(d);
    for (std::uint64_t i = 0; i < d; ++i) {
      fresh_[base + i] = seen.insert(view_[base + i]).second ? 1 : 0;
    }
    base += d;
  }
  view_off_[n + 1] = base;
}

void ProbeOracle::check_vertex(VertexId v) const {
  if (!g_->valid_vertex(v)) {
    throw std::out_of_range("probe: vertex id out of range");
  }
}

bool ProbeOracle::exists_raw(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return g_->adjacent(u, v);
}

std::uint64_t ProbeOracle::deg_raw(VertexId v) const {
  check_vertex(v);
  return g_->degree(v);
}

VertexId ProbeOracle::nbr_raw(VertexId v, std::uint64_t i) const {
  check_vertex(v);
  if (i < 1 || i > g_->degree(v)) return 0;
  if (sorted_) {
    const auto row = g_->neighbors(v);
    // rows are sorted, so a repeated neighbor is the previous entry
    if (i >= 2 && row[i - 1] == row[i - 2]) return 0;
    return row[i - 1];
  }
  const std::uint64_t pos = view_off_[v] + i - 1;
  if (!fresh_[pos]) return 0;
  return view_[pos];
}

}  // namespace lcaspan
