#include "lcaspan/tape.hpp"

#include <cmath>
#include <cstring>

namespace lcaspan {

namespace {

inline std::uint64_t rotl64(std::uint64_t x, int b) {
  return (x << b) | (x >> (64 - b));
}

inline void sipround(std::uint64_t& v0, std::uint64_t& v1, std::uint64_t& v2,
                     std::uint64_t& v3) {
  v0 += v1;
  v1 = rotl64(v1, 13);
  v1 ^= v0;
  v0 = rotl64(v0, 32);
  v2 += v3;
  v3 = rotl64(v3, 16);
  v3 ^= v2;
  v0 += v3;
  v3 = rotl64(v3, 21);
  v3 ^= v0;
  v2 += v1;
  v1 = rotl64(v1, 17);
  v1 ^= v2;
  v2 = rotl64(v2, 32);
}

inline std::uint64_t load_le64(const unsigned char* p) {
  std::uint64_t x;
  std::memcpy(&x, p, 8);
#if defined(__BYTE_ORDER__) && __BYTE_ORDER__ == __ORDER_BIG_ENDIAN__
  x = __builtin_bswap64(x);
#endif
  return x;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1,
                        const unsigned char* data, std::size_t len) {
  std::uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
  std::uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
  std::uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
  std::uint64_t v3 = 0x7465646279746573ULL ^ k1;

  const std::size_t full = len / 8;
  for (std::size_t i = 0; i < full; ++i) {
    const std::uint64_t m = load_le64(data + 8 * i);
    v3 ^= m;
    sipround(v0, v1, v2, v3);
    sipround(v0, v1, v2, v3);
    v0 ^= m;
  }
  std::uint64_t last = static_cast<std::uint64_t>(len & 0xff) << 56;
  for (std::size_t i = 8 * full; i < len; ++i) {
    last |= static_cast<std::uint64_t>(data[i]) << (8 * (i - 8 * full));
  }
  v3 ^= last;
  sipround(v0, v1, v2, v3);
  sipround(v0, v1, v2, v3);
  v0 ^= last;
  v2 ^= 0xff;
  sipround(v0, v1, v2, v3);
  sipround(v0, v1, v2, v3);
  sipround(v0, v1, v2, v3);
  sipround(v0, v1, v2, v3);
  return v0 ^ v1 ^ v2 ^ v3;
}

RandomTape::RandomTape(std::uint64_t seed)
    : seed_(seed), k0_(seed), k1_(splitmix64(seed)) {}

std::uint64_t RandomTape::uniform64(const TapeKey& k) const {
  unsigned char buf[32];
  const std::uint64_t words[4] = {static_cast<std::uint64_t>(k.domain), k.a,
                                  k.b, k.c};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 8; ++j) {
      buf[8 * i + j] = static_cast<unsigned char>(words[i] >> (8 * j));
    }
  }
  return siphash24(k0_, k1_, buf, sizeof buf);
}

bool RandomTape::coin(const TapeKey& k, double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("coin: probability outside [0,1]");
  }
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  // threshold = floor(p * 2^64), built exactly from the mantissa so the
  // comparison never depends on extended-precision behavior.
  int exp = 0;
  const double mant = std::frexp(p, &exp);  // p = mant * 2^exp, mant in [0.5,1)
  const auto mant_bits =
      static_cast<std::uint64_t>(std::ldexp(mant, 53));  // exact, <= 2^53
  const int shift = exp + 11;                            // p*2^64 = mant_bits * 2^shift
  unsigned __int128 threshold;
  if (shift >= 0) {
    threshold = static_cast<unsigned __int128>(mant_bits) << shift;
  } else {
    threshold = mant_bits >> (-shift);
  }
  return static_cast<unsigned __int128>(uniform64(k)) < threshold;
}

std::uint64_t RandomTape::uniform_below(const TapeKey& k,
                                        std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(uniform64(k)) * n;
  return static_cast<std::uint64_t>(wide >> 64);
}

std::uint64_t RandomTape::geometric(const TapeKey& k, double q) const {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("geometric: success probability outside (0,1]");
  }
  if (q >= 1.0) return 1;
  const std::uint64_t x = uniform64(k);
  // map into (0,1]; u = 0 would blow up the log
  const double u = (static_cast<double>(x) + 1.0) * 0x1p-64;
  const double t = std::floor(std::log(u) / std::log1p(-q));
  if (t >= 9.2e18) return UINT64_MAX;  // saturate instead of overflowing
  return static_cast<std::uint64_t>(t) + 1;
}

}  // namespace lcaspan
