#include "lcaspan/attach_extract.hpp"

#include <algorithm>

#include "lcaspan/parallel.hpp"

namespace lcaspan {

namespace {

struct Scan {
  VertexId hdn = 0;
  std::uint64_t cost = 0;  // probes of one highest-degree-neighbor scan
};

// Mirrors highest_degree_neighbor probe for probe: one Deg for the
// bound, one Nbr per row entry, one Deg per distinct non-self neighbor.
Scan scan_vertex(const MultiGraph& g, VertexId v) {
  Scan s;
  const auto row = g.neighbors(v);
  s.cost = 1 + row.size();
  std::uint64_t best_deg = 0;
  std::size_t i = 0;
  while (i < row.size()) {
    const VertexId w = row[i];
    std::size_t j = i;
    while (j < row.size() && row[j] == w) ++j;
    i = j;
    if (w == v) continue;
    ++s.cost;
    const std::uint64_t dw = g.degree(w);
    if (s.hdn == 0 || dw > best_deg || (dw == best_deg && w < s.hdn)) {
      s.hdn = w;
      best_deg = dw;
    }
  }
  return s;
}

void finish(const MultiGraph& g, AttachExtract& out,
            const std::vector<std::uint8_t>* heavy) {
  const VertexId n = g.vertex_count();

  VertexId vmax = 1;
  for (VertexId v = 2; v <= n; ++v) {
    if (g.degree(v) > g.degree(vmax)) vmax = v;
  }
  out.max_degree_vertex = vmax;
  for (VertexId v = 1; v <= n; ++v) {
    if (v == vmax || out.hdn[v] == 0) continue;
    ++out.doubling_total;
    if (out.hdn[v] == vmax || g.degree(out.hdn[v]) > 2 * g.degree(v)) {
      ++out.doubling_ok;
    }
  }

  std::vector<std::pair<VertexId, VertexId>> kept;
  for (VertexId v = 1; v <= n; ++v) {
    const VertexId h = out.hdn[v];
    if (h == 0) continue;
    if (heavy && (*heavy)[v] && (*heavy)[h]) continue;  // heavy rule owns it
    kept.emplace_back(std::min(v, h), std::max(v, h));
  }
  if (heavy) {
    for (VertexId v = 1; v <= n; ++v) {
      if (!(*heavy)[v]) continue;
      for (const VertexId w : g.neighbors(v)) {
        if (w > v && (*heavy)[w]) kept.emplace_back(v, w);
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  out.edges = std::move(kept);
}

}  // namespace

AttachExtract pa_extract(const MultiGraph& g, int n_threads) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int threads = resolve_threads(n_threads);

  AttachExtract out;
  out.hdn.assign(n + 1, 0);
  std::vector<std::uint64_t> scan_cost(n + 1, 0);

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t v = 1; v <= n; ++v) {
    const Scan s = scan_vertex(g, static_cast<VertexId>(v));
    out.hdn[v] = s.hdn;
    scan_cost[v] = s.cost;
  }

  std::uint64_t queries = 0, total = 0, maxp = 0;
#pragma omp parallel num_threads(threads) \
    reduction(+ : queries, total) reduction(max : maxp)
  {
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t u = 1; u <= n; ++u) {
      const auto row = g.neighbors(static_cast<VertexId>(u));
      std::size_t i = 0;
      while (i < row.size()) {
        const VertexId w = row[i];
        std::size_t j = i;
        while (j < row.size() && row[j] == w) ++j;
        auto mult = static_cast<std::uint32_t>(j - i);
        i = j;
        if (w < u) continue;
        if (w == u) mult /= 2;
        queries += mult;  // copies 2.. cost nothing and keep nothing
        if (w == static_cast<VertexId>(u)) continue;  // self-loop: 0 probes
        std::uint64_t cost = scan_cost[u];
        if (out.hdn[u] != w) cost += scan_cost[w];
        total += cost;
        maxp = std::max(maxp, cost);
      }
    }
  }
  out.queries = queries;
  out.probes_total = total;
  out.probes_max = maxp;

  finish(g, out, nullptr);
  return out;
}

AttachExtract ua_extract(const MultiGraph& g, const UaParams& params,
                         int n_threads) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const int threads = resolve_threads(n_threads);

  AttachExtract out;
  out.hdn.assign(n + 1, 0);
  std::vector<std::uint64_t> scan_cost(n + 1, 0);
  std::vector<std::uint8_t> heavy(n + 1, 0);

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t v = 1; v <= n; ++v) {
    const Scan s = scan_vertex(g, static_cast<VertexId>(v));
    out.hdn[v] = s.hdn;
    scan_cost[v] = s.cost;
    heavy[v] = g.degree(static_cast<VertexId>(v)) > params.threshold ? 1 : 0;
  }

  std::uint64_t queries = 0, total = 0, maxp = 0;
#pragma omp parallel num_threads(threads) \
    reduction(+ : queries, total) reduction(max : maxp)
  {
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t u = 1; u <= n; ++u) {
      const auto row = g.neighbors(static_cast<VertexId>(u));
      std::size_t i = 0;
      while (i < row.size()) {
        const VertexId w = row[i];
        std::size_t j = i;
        while (j < row.size() && row[j] == w) ++j;
        auto mult = static_cast<std::uint32_t>(j - i);
        i = j;
        if (w < u) continue;
        if (w == u) mult /= 2;
        queries += mult;
        if (w == static_cast<VertexId>(u)) continue;
        std::uint64_t cost = 2;  // the two degree probes
        if (!(heavy[u] && heavy[w])) {
          cost += scan_cost[u];
          if (out.hdn[u] != w) cost += scan_cost[w];
        }
        total += cost;
        maxp = std::max(maxp, cost);
      }
    }
  }
  out.queries = queries;
  out.probes_total = total;
  out.probes_max = maxp;

  finish(g, out, &heavy);
  return out;
}

}  // namespace lcaspan
