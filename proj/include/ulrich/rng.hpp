#ifndef ULRICH_RNG_HPP
#define ULRICH_RNG_HPP

#include <cstdint>
#include <random>

namespace ulrich {

// All randomness flows through this wrapper. The engine is std::mt19937_64, whose
// output stream is fixed by the C++ standard, and the reductions below are spelled
// out so other implementations can reproduce the exact draw sequence:
//   below(n):  rejection-sample raw 64-bit words w until w < 2^64 - (2^64 mod n),
//              then return w mod n.
//   int_in(lo,hi): lo + below(hi - lo + 1), as signed arithmetic.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    // 2^64 - (2^64 mod n), via unsigned wraparound; 0 means no rejection needed
    const std::uint64_t limit = 0 - ((0 - n) % n);
    std::uint64_t w;
    do {
      w = eng_();
    } while (limit != 0 && w >= limit);
    return w % n;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 finalizer; derives statistically independent per-task seeds from
// (master seed, task index) so sweep tasks are order-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace ulrich

#endif
