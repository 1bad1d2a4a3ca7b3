#include "lcaspan/attach_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "lcaspan/errors.hpp"

namespace lcaspan {

double harmonic(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("harmonic: k must be >= 1");
  long double h = 0.0L;
  for (std::uint64_t j = k; j >= 1; --j) h += 1.0L / j;  // small terms first
  return static_cast<double>(h);
}

double ua_threshold(VertexId n, std::uint32_t mu) {
  if (n < 8) throw std::invalid_argument("ua threshold: n must be >= 8");
  return mu * (harmonic(n - 1) - harmonic(6)) + mu / 2.0;
}

double ua_lambda(VertexId n, std::uint32_t mu, std::uint64_t c) {
  if (c < 1 || c > n) throw std::invalid_argument("ua lambda: bad c");
  const double head = c >= 2 ? harmonic(c - 1) : 0.0;
  return mu * (harmonic(n - 1) - head);
}

UaParams UaParams::make(VertexId n, std::uint32_t mu) {
  if (mu < 1) throw std::invalid_argument("ua params: mu must be >= 1");
  UaParams p{n, mu, ua_threshold(n, mu), 0.0, {}};
  const double ln_n = std::log(static_cast<double>(n));
  const double e2 = std::exp(2.0);
  const double ratio = mu / (3.0 * ln_n * e2);
  if (ratio > 1.0) {
    p.ladder_depth = std::log(n / e2) / std::log(ratio);
    const auto depth = static_cast<std::uint32_t>(std::ceil(p.ladder_depth));
    double size = n / e2;
    for (std::uint32_t m = 1; m <= depth; ++m) {
      size /= ratio;
      p.center_sizes.push_back(std::max(size, 1.0));
    }
  }
  return p;
}

double ua_center_threshold(const UaParams& params, std::uint32_t m) {
  if (m < 1 || m > params.center_sizes.size()) {
    throw std::invalid_argument("ua center threshold: no such ladder level");
  }
  const double e2 = std::exp(2.0);
  const auto anchor = static_cast<std::uint64_t>(
      std::ceil(e2 * params.center_sizes[m - 1]));
  const std::uint64_t c = std::min<std::uint64_t>(anchor, params.n);
  return ua_lambda(params.n, params.mu, std::max<std::uint64_t>(c, 1)) +
         params.mu / 2.0;
}

VertexId highest_degree_neighbor(Prober& pr, VertexId v) {
  const std::uint64_t d = pr.deg(v);
  VertexId best = 0;
  std::uint64_t best_deg = 0;
  for (std::uint64_t i = 1; i <= d; ++i) {
    const VertexId w = pr.nbr(v, i);
    if (w == 0 || w == v) continue;  // suppressed copy or self-loop
    const std::uint64_t dw = pr.deg(w);
    if (best == 0 || dw > best_deg || (dw == best_deg && w < best)) {
      best = w;
      best_deg = dw;
    }
  }
  return best;
}

bool pa_query(Prober& pr, const EdgeRef& e) {
  if (e.index < 1 || e.u < 1 || e.v < 1) {
    throw std::invalid_argument("pa query: malformed edge reference");
  }
  if (e.index != 1) return false;
  if (e.u == e.v) return false;
  if (highest_degree_neighbor(pr, e.u) == e.v) return true;
  return highest_degree_neighbor(pr, e.v) == e.u;
}

bool ua_query(Prober& pr, const UaParams& params, const EdgeRef& e) {
  if (e.index < 1 || e.u < 1 || e.v < 1) {
    throw std::invalid_argument("ua query: malformed edge reference");
  }
  if (e.index != 1) return false;
  if (e.u == e.v) return false;
  const std::uint64_t du = pr.deg(e.u);
  const std::uint64_t dv = pr.deg(e.v);
  if (std::min(du, dv) > params.threshold) return true;
  if (highest_degree_neighbor(pr, e.u) == e.v) return true;
  return highest_degree_neighbor(pr, e.v) == e.u;
}

bool ua_arrival_query(const MultiGraph& g, const EdgeRef& e) {
  if (!g.has_arrival() || !g.has_draw_labels()) {
    throw std::invalid_argument("ua arrival query: metadata absent");
  }
  if (e.index != 1 || e.u == e.v) return false;
  const bool u_later = g.arrival(e.u) > g.arrival(e.v);
  const VertexId later = u_later ? e.u : e.v;
  const VertexId earlier = u_later ? e.v : e.u;
  const auto labels = g.draws(later);
  // the first draw of the later endpoint is the pair's first copy
  return !labels.empty() && labels.front() == earlier;
}

UaRootResult ua_root_find(Prober& pr, const UaParams& params,
                          VertexId start) {
  const double mark = params.mu * harmonic(params.n - 1) - params.mu / 2.0;
  UaRootResult out;
  std::unordered_set<VertexId> visited;
  VertexId w = start;
  while (pr.deg(w) < mark) {
    if (!visited.insert(w).second || visited.size() > params.n) {
      throw RegimeViolationError("ua root find: walk cycled below the mark");
    }
    const VertexId next = highest_degree_neighbor(pr, w);
    if (next == 0) {
      throw RegimeViolationError("ua root find: walk dead-ended");
    }
    w = next;
    ++out.walk_length;
  }
  out.members.push_back(w);
  const std::uint64_t d = pr.deg(w);
  for (std::uint64_t i = 1; i <= d; ++i) {
    const VertexId x = pr.nbr(w, i);
    if (x == 0 || x == w) continue;
    if (pr.deg(x) > mark) out.members.push_back(x);
  }
  std::sort(out.members.begin(), out.members.end());
  out.members.erase(std::unique(out.members.begin(), out.members.end()),
                    out.members.end());
  return out;
}

}  // namespace lcaspan
