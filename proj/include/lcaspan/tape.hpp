#pragma once

#include <cstdint>
#include <stdexcept>

namespace lcaspan {

// Key domains. Distinct domains never share draws, so independent parts of
// an experiment can consume the same seed without correlation.
enum class Dom : std::uint64_t {
  ErEdge = 1,      // graph generation: ER pair gaps
  Attach = 2,      // graph generation: PA/UA target draws
  Shuffle = 3,     // vertex relabeling permutation
  AdjShuffle = 4,  // unsorted adjacency-order shuffle
  EdgeKeep = 5,    // subsampling baseline, per unordered pair
  TwoEdges = 6,    // two-random-edges baseline, per endpoint
  Subsample = 7,   // pre-sparsification, per unordered pair
  Geom = 8,        // independent-set gap draws
  LagRow = 9,      // conditioned row coins
  LagFree = 10,    // unconditioned pair coins
  PairSample = 11, // verification pair sampling
};

struct TapeKey {
  Dom domain;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
};

/// Stateless keyed randomness: every draw is a pure function of
/// (seed, key), so any consumer can replay any draw at any time.
/// Backed by SipHash-2-4 over the 32-byte key block.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t uniform64(const TapeKey& k) const;

  /// True with probability p. The comparison is done in 64-bit fixed
  /// point (threshold = floor(p * 2^64)), so results are bit-identical
  /// across platforms.
  bool coin(const TapeKey& k, double p) const;

  /// Uniform draw from [0, n), n >= 1.
  std::uint64_t uniform_below(const TapeKey& k, std::uint64_t n) const;

  /// Geometric draw >= 1 with success probability q in (0, 1]:
  /// P(X = t) = q (1-q)^(t-1). Inverse CDF on a uniform mapped into
  /// (0, 1], constant work regardless of the outcome.
  std::uint64_t geometric(const TapeKey& k, double q) const;

 private:
  std::uint64_t seed_;
  std::uint64_t k0_, k1_;
};

/// SipHash-2-4 of an arbitrary byte string (exposed for tests; the
/// published test vectors pin the construction).
std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1,
                        const unsigned char* data, std::size_t len);

}  // namespace lcaspan
