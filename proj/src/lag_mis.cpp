#include "lcaspan/lag_mis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcaspan/errors.hpp"

namespace lcaspan {

namespace {

void check_args(VertexId n, double p) {
  if (n < 1) throw std::invalid_argument("lag: n must be >= 1");
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("lag: p outside (0,1]");
  }
}

inline void bump(LagStats* stats, std::uint64_t k = 1) {
  if (stats) stats->tape_evals += k;
}

}  // namespace

std::uint64_t lag_retry_cap(VertexId n, double p) {
  return static_cast<std::uint64_t>(
      std::ceil(40.0 * std::log(static_cast<double>(std::max<VertexId>(n, 2))) /
                p));
}

std::vector<VertexId> lag_compute_mis(const RandomTape& tape, VertexId n,
                                      double p, LagStats* stats) {
  check_args(n, p);
  std::vector<VertexId> members{1};
  if (p >= 1.0) return members;  // every later vertex touches vertex 1
  std::uint64_t v = 1;
  while (true) {
    const std::uint64_t j = members.size();
    // next member = first later vertex with no edge into the current
    // set; each vertex misses all j members with probability (1-p)^j
    const double miss_all = std::pow(1.0 - p, static_cast<double>(j));
    if (miss_all <= 0.0) break;  // underflow: next gap exceeds any n
    bump(stats);
    v += tape.geometric({Dom::Geom, j}, miss_all);
    if (v > n) break;
    members.push_back(static_cast<VertexId>(v));
  }
  return members;
}

bool lag_query_mis(const RandomTape& tape, VertexId n, double p, VertexId a,
                   LagStats* stats) {
  check_args(n, p);
  if (a < 1 || a > n) throw std::invalid_argument("lag: vertex out of range");
  const auto members = lag_compute_mis(tape, n, p, stats);
  return std::binary_search(members.begin(), members.end(), a);
}

namespace {

// Resolves the conditioned row of non-member b: edges (v_1,b)..(v_i,b)
// sampled independently, rejecting rounds with no edge at all. Keyed by
// (b, round, slot) only, so every query touching b's row sees the same
// resolution.
std::vector<bool> resolve_row(const RandomTape& tape, VertexId n, double p,
                              VertexId b, std::uint64_t i, LagStats* stats) {
  const std::uint64_t cap = lag_retry_cap(n, p);
  std::vector<bool> row(i);
  for (std::uint64_t round = 1; round <= cap; ++round) {
    bool any = false;
    for (std::uint64_t s = 1; s <= i; ++s) {
      bump(stats);
      const bool bit = tape.coin({Dom::LagRow, b, round, s}, p);
      row[s - 1] = bit;
      any |= bit;
    }
    if (any) return row;
  }
  throw RetryExhaustedError("lag: conditioned row rejected too many rounds");
}

}  // namespace

bool lag_query_edge(const RandomTape& tape, VertexId n, double p, VertexId a,
                    VertexId b, LagStats* stats) {
  check_args(n, p);
  if (a < 1 || a > n || b < 1 || b > n) {
    throw std::invalid_argument("lag: vertex out of range");
  }
  if (a == b) throw std::invalid_argument("lag: self-pair query");

  const auto members = lag_compute_mis(tape, n, p, stats);
  const auto member_rank = [&](VertexId x) -> std::uint64_t {
    // 1-based rank in M, 0 if absent
    const auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) return 0;
    return static_cast<std::uint64_t>(it - members.begin()) + 1;
  };

  const std::uint64_t ra = member_rank(a);
  const std::uint64_t rb = member_rank(b);
  const TapeKey pair_key{Dom::LagFree, std::min(a, b), std::max(a, b)};

  if (ra != 0 && rb != 0) return false;
  if (ra == 0 && rb == 0) {
    bump(stats);
    return tape.coin(pair_key, p);
  }

  const VertexId outside = ra == 0 ? a : b;
  const std::uint64_t j = ra == 0 ? rb : ra;
  // members strictly below the non-member; at least v_1 = 1 qualifies
  const auto below = static_cast<std::uint64_t>(
      std::lower_bound(members.begin(), members.end(), outside) -
      members.begin());
  if (j > below) {
    // this member was not part of the skip event for `outside`
    bump(stats);
    return tape.coin(pair_key, p);
  }
  const auto row = resolve_row(tape, n, p, outside, below, stats);
  return row[j - 1];
}

}  // namespace lcaspan
