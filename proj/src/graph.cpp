#include "lcaspan/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lcaspan {

namespace {

// Seed-derived uniform permutation of [1,n] (Fisher-Yates off the tape).
std::vector<VertexId> random_relabel(VertexId n, const RandomTape& tape) {
  std::vector<VertexId> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (VertexId i = n; i >= 2; --i) {
    const auto j = static_cast<VertexId>(
        1 + tape.uniform_below({Dom::Shuffle, i}, i));
    std::swap(perm[i], perm[j]);
  }
  return perm;  // perm[old] = new
}

}  // namespace

void MultiGraph::build_csr(VertexId n, std::span<const VertexId> endpoints) {
  n_ = n;
  off_.assign(n + 2, 0);
  for (const VertexId v : endpoints) ++off_[v + 1];
  for (VertexId v = 1; v <= n; ++v) off_[v + 1] += off_[v];
  adj_.resize(endpoints.size());
  std::vector<std::uint64_t> cursor(off_.begin(), off_.end());
  for (std::size_t t = 0; t + 1 < endpoints.size(); t += 2) {
    const VertexId a = endpoints[t], b = endpoints[t + 1];
    adj_[cursor[a]++] = b;
    adj_[cursor[b]++] = a;
  }
  for (VertexId v = 1; v <= n; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(off_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(off_[v + 1]));
  }
}

MultiGraph MultiGraph::from_edges(
    VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<VertexId> flat;
  flat.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("from_edges: endpoint out of range");
    }
    flat.push_back(u);
    flat.push_back(v);
  }
  MultiGraph g;
  g.build_csr(n, flat);
  return g;
}

std::uint32_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
  const auto row = neighbors(u);
  const auto [lo, hi] = std::equal_range(row.begin(), row.end(), v);
  auto count = static_cast<std::uint32_t>(hi - lo);
  if (u == v) count /= 2;
  return count;
}

MultiGraph generate_er(VertexId n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_er: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("generate_er: p outside [0,1]");
  }
  const RandomTape tape(seed);
  std::vector<VertexId> flat;
  if (p > 0.0) {
    flat.reserve(static_cast<std::size_t>(
        1.1 * p * (static_cast<double>(n) * (n - 1) / 2) * 2 + 64));
    for (VertexId u = 1; u < n; ++u) {
      // jump through the row u < v <= n with geometric gaps
      std::uint64_t v = u;
      for (std::uint64_t draw = 0;; ++draw) {
        v += tape.geometric({Dom::ErEdge, u, draw}, p);
        if (v > n) break;
        flat.push_back(u);
        flat.push_back(static_cast<VertexId>(v));
      }
    }
  }
  MultiGraph g;
  g.build_csr(n, flat);
  g.meta_ = {"er", p, seed};
  return g;
}

MultiGraph generate_pa(VertexId n, std::uint32_t mu, std::uint64_t seed) {
  if (n < 1 || mu < 1) {
    throw std::invalid_argument("generate_pa: need n >= 1 and mu >= 1");
  }
  const RandomTape tape(seed);

  // endpoints doubles as the degree-proportional sampling pool: vertex j
  // occupies exactly deg(j) slots at any point in time.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2ull * mu * n);
  for (std::uint32_t s = 0; s < mu; ++s) {
    endpoints.push_back(1);
    endpoints.push_back(1);
  }
  for (VertexId i = 2; i <= n; ++i) {
    for (std::uint32_t s = 0; s < mu; ++s) {
      const std::uint64_t total = endpoints.size();
      const std::uint64_t r =
          tape.uniform_below({Dom::Attach, i, s}, total + 1);
      const VertexId target = r == total ? i : endpoints[r];
      endpoints.push_back(i);
      endpoints.push_back(target);
    }
  }

  const auto perm = random_relabel(n, tape);
  for (VertexId& v : endpoints) v = perm[v];

  MultiGraph g;
  g.build_csr(n, endpoints);
  g.arrival_.assign(n + 1, 0);
  g.by_arrival_.assign(n + 1, 0);
  for (VertexId old = 1; old <= n; ++old) {
    g.arrival_[perm[old]] = old;
    g.by_arrival_[old] = perm[old];
  }
  g.meta_ = {"pa", static_cast<double>(mu), seed};
  return g;
}

MultiGraph generate_ua(VertexId n, std::uint32_t mu, std::uint64_t seed,
                       bool keep_draw_labels) {
  if (n < 2 || mu < 1) {
    throw std::invalid_argument("generate_ua: need n >= 2 and mu >= 1");
  }
  const RandomTape tape(seed);

  std::vector<VertexId> endpoints;
  endpoints.reserve(2ull * mu * (n - 1));
  for (VertexId i = 2; i <= n; ++i) {
    for (std::uint32_t s = 0; s < mu; ++s) {
      const auto target = static_cast<VertexId>(
          1 + tape.uniform_below({Dom::Attach, i, s}, i - 1));
      endpoints.push_back(i);
      endpoints.push_back(target);
    }
  }

  const auto perm = random_relabel(n, tape);
  for (VertexId& v : endpoints) v = perm[v];

  MultiGraph g;
  g.build_csr(n, endpoints);
  g.arrival_.assign(n + 1, 0);
  g.by_arrival_.assign(n + 1, 0);
  for (VertexId old = 1; old <= n; ++old) {
    g.arrival_[perm[old]] = old;
    g.by_arrival_[old] = perm[old];
  }
  if (keep_draw_labels) {
    g.draw_off_.assign(n + 2, 0);
    for (VertexId v = 1; v <= n; ++v) {
      g.draw_off_[v + 1] =
          g.draw_off_[v] + (g.arrival_[v] == 1 ? 0 : mu);
    }
    g.draws_.resize(static_cast<std::size_t>(mu) * (n - 1));
    for (std::size_t t = 0; t < endpoints.size(); t += 2) {
      const VertexId owner = endpoints[t];
      g.draws_[g.draw_off_[owner] + (t / 2) % mu] = endpoints[t + 1];
    }
  }
  g.meta_ = {"ua", static_cast<double>(mu), seed};
  return g;
}

void MultiGraph::write_edge_list(std::ostream& os) const {
  os << n_ << ' ' << edge_count() << ' ' << meta_.model << ' ' << meta_.param
     << ' ' << meta_.seed << '\n';
  for_each_pair([&](VertexId u, VertexId v, std::uint32_t mult) {
    for (std::uint32_t i = 1; i <= mult; ++i) {
      os << u << ' ' << v << ' ' << i << '\n';
    }
  });
}

MultiGraph MultiGraph::read_edge_list(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) {
    throw std::runtime_error("edge list: missing header");
  }
  std::istringstream hs(header);
  VertexId n = 0;
  std::uint64_t m = 0;
  Meta meta;
  if (!(hs >> n >> m >> meta.model >> meta.param >> meta.seed)) {
    throw std::runtime_error("edge list: bad header");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  VertexId u = 0, v = 0;
  std::uint32_t idx = 0;
  while (is >> u >> v >> idx) edges.emplace_back(u, v);
  if (edges.size() != m) {
    throw std::runtime_error("edge list: edge count disagrees with header");
  }
  MultiGraph g = from_edges(n, edges);
  g.meta_ = meta;
  return g;
}

}  // namespace lcaspan
