#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lcaspan/er_sss.hpp"
#include "lcaspan/errors.hpp"
#include "lcaspan/graph.hpp"

using namespace lcaspan;

namespace {

MultiGraph path_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return MultiGraph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("subsampling coin") {
  const RandomTape tape(1);
  const auto at_floor = SssParams::make(500, 7.0 * std::log(500.0) / 500.0);
  for (VertexId v = 2; v <= 100; ++v) {
    CHECK(sss_in_subsample(tape, at_floor, 1, v));  // ratio clamps to 1
  }

  const auto doubled = SssParams::make(500, 2.0 * at_floor.p_star);
  std::uint64_t kept = 0, total = 0;
  for (VertexId u = 1; u <= 400; ++u) {
    for (VertexId v = u + 1; v <= 400; ++v) {
      CHECK(sss_in_subsample(tape, doubled, u, v) ==
            sss_in_subsample(tape, doubled, v, u));
      kept += sss_in_subsample(tape, doubled, u, v);
      ++total;
    }
  }
  const double rate = static_cast<double>(kept) / total;
  CHECK(std::abs(rate - 0.5) <= 3.0 * std::sqrt(0.25 / total));
}

TEST_CASE("reference rounds on a path") {
  // path 1-2-3-4-5, nothing subsampled away (keep probability clamps
  // to 1). Hand trace: 1 is the sole candidate; its only neighbor 2 has
  // 1 as its smallest neighbor, so 1 gets no message, elects itself
  // leader, and nominates 2, which re-adds {1,3}.
  const auto g = path_graph(5);
  const auto params = SssParams::make(5, 1.0);
  const RandomTape tape(3);
  const auto ref = sss_reference(g, tape, params);

  CHECK(ref.role[1] == SssRole::Leader);
  for (VertexId v = 2; v <= 5; ++v) {
    CHECK(ref.role[v] == SssRole::NonCandidate);
  }
  CHECK(ref.admin[2]);
  CHECK(ref.admin_count == 1);
  CHECK(ref.candidate_count == 1);
  CHECK(ref.leader_count == 1);

  const std::vector<std::pair<VertexId, VertexId>> expected{
      {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(ref.edges == expected);
  CHECK(ref.round2_edges == 4);
  CHECK(ref.round3_edges == 0);
}

TEST_CASE("reference on a single edge and on an empty graph") {
  const auto params = SssParams::make(4, 1.0);
  const RandomTape tape(5);

  const auto one = sss_reference(
      MultiGraph::from_edges(2, std::vector<std::pair<VertexId, VertexId>>{
                                    {1, 2}}),
      tape, SssParams::make(2, 1.0));
  CHECK(one.edges == std::vector<std::pair<VertexId, VertexId>>{{1, 2}});
  CHECK(one.role[1] == SssRole::Leader);
  CHECK(one.role[2] == SssRole::NonCandidate);
  CHECK(one.admin[2]);

  const auto empty = sss_reference(
      MultiGraph::from_edges(4, std::vector<std::pair<VertexId, VertexId>>{}),
      tape, params);
  CHECK(empty.edges.empty());
  CHECK(empty.leader_count == 4);
  CHECK(empty.admin_count == 0);
}

TEST_CASE("query agrees with the reference edge by edge") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (const double factor : {1.0, 2.0}) {
      const VertexId n = 80;
      const double p_star = 7.0 * std::log(static_cast<double>(n)) / n;
      const double p = std::min(factor * p_star, 1.0);
      const auto params = SssParams::make(n, p);
      const auto g = generate_er(n, p, seed);
      const RandomTape tape(seed + 1000);
      const auto ref = sss_reference(g, tape, params);
      const ProbeOracle oracle(g, AdjacencyOrder::Shuffled, seed);

      g.for_each_pair([&](VertexId u, VertexId v, std::uint32_t) {
        Prober pr(oracle);
        CHECK(sss_query(pr, tape, params, u, v) == ref.contains(u, v));
      });
    }
  }
}

TEST_CASE("dropped edges cost no exploration") {
  const VertexId n = 120;
  const double p_star = 7.0 * std::log(static_cast<double>(n)) / n;
  const double p = std::min(4.0 * p_star, 1.0);
  const auto params = SssParams::make(n, p);
  const auto g = generate_er(n, p, 9);
  const RandomTape tape(77);
  const ProbeOracle oracle(g, AdjacencyOrder::Sorted);

  std::uint64_t dropped = 0;
  g.for_each_pair([&](VertexId u, VertexId v, std::uint32_t) {
    if (sss_in_subsample(tape, params, u, v)) return;
    Prober pr(oracle);
    CHECK_FALSE(sss_query(pr, tape, params, u, v));
    CHECK(pr.stats.total() == 1);  // just the membership check
    ++dropped;
  });
  CHECK(dropped > 0);
}

TEST_CASE("counting structure of the rounds") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const VertexId n = 150;
    const double p = 7.0 * std::log(static_cast<double>(n)) / n;
    const auto params = SssParams::make(n, p);
    const auto g = generate_er(n, p, seed);
    const RandomTape tape(seed);
    const auto ref = sss_reference(g, tape, params);

    const std::uint64_t non_candidates = n - ref.candidate_count;
    CHECK(ref.round2_edges == non_candidates);
    CHECK(ref.round3_edges == ref.candidate_count - ref.leader_count);
    CHECK(ref.edges.size() <= g.edge_count());
    for (const auto& [u, v] : ref.edges) {
      CHECK(g.adjacent(u, v));
      CHECK(sss_in_subsample(tape, params, u, v));
    }
  }
}

TEST_CASE("query rejects non-edges") {
  const auto g = path_graph(4);
  const auto params = SssParams::make(4, 1.0);
  const RandomTape tape(2);
  const ProbeOracle oracle(g, AdjacencyOrder::Sorted);
  Prober pr(oracle);
  CHECK_THROWS_AS(sss_query(pr, tape, params, 1, 3), NotAnEdgeError);
}
