#include "lcaspan/er_sss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "lcaspan/errors.hpp"

namespace lcaspan {

SssParams SssParams::make(VertexId n, double p) {
  if (n < 2) throw std::invalid_argument("sss: n too small");
  const double p_star =
      7.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("sss: p outside (0,1]");
  }
  return {n, p, p_star};
}

double SssParams::keep_probability() const {
  return std::min(p_star / p, 1.0);
}

bool sss_in_subsample(const RandomTape& tape, const SssParams& params,
                      VertexId u, VertexId v) {
  return tape.coin({Dom::Subsample, std::min(u, v), std::max(u, v)},
                   params.keep_probability());
}

namespace {

// Round-3 message: non-candidate u' tells every neighbor except its
// smallest one that it is not a leader.
inline bool sends_not_leader(VertexId receiver, SssRole sender_role,
                             VertexId sender_smallest) {
  return sender_role == SssRole::NonCandidate && sender_smallest != receiver;
}

}  // namespace

bool SssReference::contains(VertexId u, VertexId v) const {
  const auto e = std::minmax(u, v);
  return std::binary_search(edges.begin(), edges.end(),
                            std::pair<VertexId, VertexId>{e.first, e.second});
}

SssReference sss_reference(const MultiGraph& g, const RandomTape& tape,
                           const SssParams& params) {
  const VertexId n = g.vertex_count();
  // G' adjacency (subsampled); rows stay sorted
  std::vector<std::vector<VertexId>> sub(n + 1);
  for (VertexId u = 1; u <= n; ++u) {
    for (const VertexId w : g.neighbors(u)) {
      if (w > u && w != u && sss_in_subsample(tape, params, u, w)) {
        sub[u].push_back(w);
        sub[w].push_back(u);
      }
    }
  }
  for (auto& row : sub) std::sort(row.begin(), row.end());

  SssReference ref;
  ref.role.assign(n + 1, SssRole::Candidate);
  ref.admin.assign(n + 1, 0);
  std::vector<VertexId> smallest(n + 1, 0), largest(n + 1, 0);

  // rounds 1-2: roles and the edge to each non-candidate's smallest
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (VertexId v = 1; v <= n; ++v) {
    if (!sub[v].empty()) {
      smallest[v] = sub[v].front();
      largest[v] = sub[v].back();
    }
    if (smallest[v] != 0 && smallest[v] < v) {
      ref.role[v] = SssRole::NonCandidate;
      kept.emplace_back(std::min(v, smallest[v]), std::max(v, smallest[v]));
      ++ref.round2_edges;
    } else {
      ++ref.candidate_count;
    }
  }

  // round 3: candidates either attach to the smallest sender or lead
  for (VertexId v = 1; v <= n; ++v) {
    if (ref.role[v] != SssRole::Candidate) continue;
    VertexId min_sender = 0;
    for (const VertexId u : sub[v]) {
      if (sends_not_leader(v, ref.role[u], smallest[u])) {
        min_sender = u;  // rows sorted: first sender is the smallest
        break;
      }
    }
    if (min_sender != 0) {
      kept.emplace_back(std::min(v, min_sender), std::max(v, min_sender));
      ++ref.round3_edges;
    } else {
      ref.role[v] = SssRole::Leader;
      ++ref.leader_count;
      if (largest[v] != 0) ref.admin[largest[v]] = 1;
    }
  }

  // round 4: every administrator keeps its entire G' neighborhood
  for (VertexId a = 1; a <= n; ++a) {
    if (!ref.admin[a]) continue;
    ++ref.admin_count;
    for (const VertexId u : sub[a]) {
      kept.emplace_back(std::min(a, u), std::max(a, u));
      ++ref.round4_edges;
    }
  }

  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  ref.edges = std::move(kept);
  return ref;
}

namespace {

// Everything sss_query learns about one explored vertex.
struct LocalView {
  std::vector<VertexId> sub_nbrs;  // full G' row, ascending
  VertexId smallest = 0;
  VertexId largest = 0;
  bool candidate = false;
};

class BallExplorer {
 public:
  BallExplorer(Prober& pr, const RandomTape& tape, const SssParams& params)
      : pr_(pr), tape_(tape), params_(params) {}

  // Scans the vertex's full adjacency row, pruning edges that did not
  // survive pre-sparsification. Memoized per query, so each vertex costs
  // its Deg + deg(v) Nbr probes at most once.
  const LocalView& view(VertexId v) {
    auto it = views_.find(v);
    if (it != views_.end()) return it->second;
    LocalView lv;
    const std::uint64_t d = pr_.deg(v);
    for (std::uint64_t i = 1; i <= d; ++i) {
      const VertexId w = pr_.nbr(v, i);
      if (w == 0 || w == v) continue;
      if (sss_in_subsample(tape_, params_, v, w)) lv.sub_nbrs.push_back(w);
    }
    std::sort(lv.sub_nbrs.begin(), lv.sub_nbrs.end());
    if (!lv.sub_nbrs.empty()) {
      lv.smallest = lv.sub_nbrs.front();
      lv.largest = lv.sub_nbrs.back();
    }
    lv.candidate = lv.smallest == 0 || v < lv.smallest;
    return views_.emplace(v, std::move(lv)).first->second;
  }

  bool non_candidate(VertexId v) { return !view(v).candidate; }

  // Smallest G' neighbor that messaged the candidate v, 0 if none.
  VertexId min_sender(VertexId v) {
    const LocalView& lv = view(v);
    for (const VertexId u : lv.sub_nbrs) {
      const LocalView& uv = view(u);
      if (!uv.candidate && uv.smallest != v) return u;
    }
    return 0;
  }

  bool leader(VertexId v) {
    return view(v).candidate && min_sender(v) == 0;
  }

  // v received "you are my administrator" from some leader neighbor.
  bool administrator(VertexId v) {
    for (const VertexId w : view(v).sub_nbrs) {
      if (view(w).largest == v && leader(w)) return true;
    }
    return false;
  }

 private:
  Prober& pr_;
  const RandomTape& tape_;
  const SssParams& params_;
  std::unordered_map<VertexId, LocalView> views_;
};

}  // namespace

bool sss_query(Prober& pr, const RandomTape& tape, const SssParams& params,
               VertexId u, VertexId v) {
  if (!pr.exists(u, v)) throw NotAnEdgeError("sss: pair not in G");
  if (u == v) return false;
  if (!sss_in_subsample(tape, params, u, v)) return false;

  BallExplorer ball(pr, tape, params);

  // round 2: edge to the smallest neighbor of a non-candidate
  if (ball.non_candidate(u) && ball.view(u).smallest == v) return true;
  if (ball.non_candidate(v) && ball.view(v).smallest == u) return true;
  // round 3: candidate attaches to its smallest messaging neighbor
  if (ball.view(u).candidate && ball.min_sender(u) == v) return true;
  if (ball.view(v).candidate && ball.min_sender(v) == u) return true;
  // round 4: administrators keep their whole G' neighborhood
  if (ball.administrator(u) || ball.administrator(v)) return true;
  return false;
}

}  // namespace lcaspan
