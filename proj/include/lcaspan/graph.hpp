#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcaspan/tape.hpp"

namespace lcaspan {

// Vertex ids are 1-based; 0 is the null/bottom sentinel throughout.
using VertexId = std::uint32_t;

/// One parallel edge between the unordered pair {u,v}; index is its
/// 1-based rank among the pair's parallel copies.
struct EdgeRef {
  VertexId u;
  VertexId v;
  std::uint32_t index;
};

/// Undirected multigraph, adjacency stored in CSR form with each row
/// sorted ascending. A self-loop contributes two entries to its row.
/// Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;

  static MultiGraph from_edges(
      VertexId n, std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId vertex_count() const { return n_; }
  /// Number of edges; a self-loop counts once (but adds 2 to its degree).
  std::uint64_t edge_count() const { return adj_.size() / 2; }
  std::uint64_t degree(VertexId v) const {
    return off_[v + 1] - off_[v];
  }
  std::uint64_t degree_sum() const { return adj_.size(); }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  bool valid_vertex(VertexId v) const { return v >= 1 && v <= n_; }

  /// Multiplicity of the pair {u,v}; self-loops report loop count.
  std::uint32_t multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const {
    return multiplicity(u, v) > 0;
  }

  // Attachment-model metadata (absent for ER / from_edges graphs).
  bool has_arrival() const { return !arrival_.empty(); }
  /// Arrival time (1..n) of vertex v under the generation process.
  VertexId arrival(VertexId v) const { return arrival_[v]; }
  /// Vertex that arrived at time t.
  VertexId vertex_at_arrival(VertexId t) const { return by_arrival_[t]; }

  // Uniform-attachment draw labels: the targets vertex v chose when it
  // arrived, in draw order (empty for the root and for other models).
  bool has_draw_labels() const { return !draw_off_.empty(); }
  std::span<const VertexId> draws(VertexId v) const {
    return {draws_.data() + draw_off_[v], draws_.data() + draw_off_[v + 1]};
  }

  /// Visits every unordered pair once as f(u, v, multiplicity), u <= v.
  template <class F>
  void for_each_pair(F&& f) const {
    for (VertexId u = 1; u <= n_; ++u) {
      const auto row = neighbors(u);
      std::size_t i = 0;
      while (i < row.size()) {
        const VertexId w = row[i];
        std::size_t j = i;
        while (j < row.size() && row[j] == w) ++j;
        std::uint32_t mult = static_cast<std::uint32_t>(j - i);
        if (w == u) mult /= 2;  // each loop occupies two row slots
        if (w >= u) f(u, w, mult);
        i = j;
      }
    }
  }

  struct Meta {
    std::string model = "raw";  // er | pa | ua | raw
    double param = 0.0;         // p for er, mu for pa/ua
    std::uint64_t seed = 0;
  };
  const Meta& meta() const { return meta_; }

  friend MultiGraph generate_er(VertexId n, double p, std::uint64_t seed);
  friend MultiGraph generate_pa(VertexId n, std::uint32_t mu,
                                std::uint64_t seed);
  friend MultiGraph generate_ua(VertexId n, std::uint32_t mu,
                                std::uint64_t seed, bool keep_draw_labels);

  void write_edge_list(std::ostream& os) const;
  static MultiGraph read_edge_list(std::istream& is);

 private:
  void build_csr(VertexId n, std::span<const VertexId> endpoints);

  VertexId n_ = 0;
  std::vector<std::uint64_t> off_;  // size n+2, off_[1..n+1]
  std::vector<VertexId> adj_;
  std::vector<VertexId> arrival_;     // 1-based, arrival_[v] = time
  std::vector<VertexId> by_arrival_;  // inverse of arrival_
  std::vector<std::uint64_t> draw_off_;
  std::vector<VertexId> draws_;
  Meta meta_;
};

/// Simple graph on [1,n], each pair present independently with
/// probability p. Deterministic in (n, p, seed); rows are produced by
/// geometric gap jumps so the cost is O(n + m).
MultiGraph generate_er(VertexId n, double p, std::uint64_t seed);

/// Preferential attachment: round 1 gives v1 mu self-loops, every later
/// round adds mu edges one at a time, each landing on vertex j with
/// probability deg(j)/(total+1) and self-looping with probability
/// (deg(i)+1)/(total+1), degrees updated after every single edge.
/// Vertex ids are relabeled by a seed-derived uniform permutation;
/// arrival metadata keeps the inverse map.
MultiGraph generate_pa(VertexId n, std::uint32_t mu, std::uint64_t seed);

/// Uniform attachment: v1 starts bare, every later vertex draws mu
/// neighbors independently and uniformly among its predecessors
/// (parallel edges possible, no self-loops). Ids relabeled as in
/// generate_pa; draw labels are kept for the arrival-time variant.
MultiGraph generate_ua(VertexId n, std::uint32_t mu, std::uint64_t seed,
                       bool keep_draw_labels = true);

}  // namespace lcaspan
