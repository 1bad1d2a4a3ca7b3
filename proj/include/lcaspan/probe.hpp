#pragma once

#include <cstdint>
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/tape.hpp"

namespace lcaspan {

enum class AdjacencyOrder { Sorted, Shuffled };

/// Read-only probe facade over a MultiGraph. Immutable after
/// construction, so one oracle can serve any number of concurrent
/// probers. Shuffled order applies a seed-derived uniform shuffle to
/// every row so the exposed order carries no generation signal.
class ProbeOracle {
 public:
  ProbeOracle(const MultiGraph& g, AdjacencyOrder order,
              std::uint64_t shuffle_seed = 0);

  VertexId vertex_count() const { return g_->vertex_count(); }
  bool sorted() const { return sorted_; }
  const MultiGraph& graph() const { return *g_; }

  // Raw probe answers (no accounting; see Prober).
  bool exists_raw(VertexId u, VertexId v) const;
  std::uint64_t deg_raw(VertexId v) const;
  /// i is 1-based. Returns 0 (bottom) past the end of the row and for
  /// any entry whose neighbor id already appeared earlier in the row
  /// (the parallel-edge suppression rule).
  VertexId nbr_raw(VertexId v, std::uint64_t i) const;

 private:
  void check_vertex(VertexId v) const;

  const MultiGraph* g_;
  bool sorted_;
  std::vector<VertexId> view_;          // shuffled rows (empty when sorted)
  std::vector<std::uint8_t> fresh_;     // first-occurrence flags for view_
  std::vector<std::uint64_t> view_off_; // per-row offsets into view_
};

struct ProbeStats {
  std::uint64_t exists = 0;
  std::uint64_t deg = 0;
  std::uint64_t nbr = 0;

  std::uint64_t total() const { return exists + deg + nbr; }
  void reset() { exists = deg = nbr = 0; }
  ProbeStats& operator+=(const ProbeStats& o) {
    exists += o.exists;
    deg += o.deg;
    nbr += o.nbr;
    return *this;
  }
};

/// Per-query probe context: counts every probe it forwards. Cheap to
/// create; parallel workers hold one each so counters never contend.
struct Prober {
  const ProbeOracle& oracle;
  ProbeStats stats;

  explicit Prober(const ProbeOracle& o) : oracle(o) {}

  bool exists(VertexId u, VertexId v) {
    ++stats.exists;
    return oracle.exists_raw(u, v);
  }
  std::uint64_t deg(VertexId v) {
    ++stats.deg;
    return oracle.deg_raw(v);
  }
  VertexId nbr(VertexId v, std::uint64_t i) {
    ++stats.nbr;
    return oracle.nbr_raw(v, i);
  }
};

}  // namespace lcaspan
