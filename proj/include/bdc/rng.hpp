#ifndef BDC_RNG_HPP
#define BDC_RNG_HPP

#include <cstdint>
#include <random>

namespace bdc {

// Seedable generator used everywhere randomness is needed. std::mt19937_64 is
// fully pinned by the C++ standard, so identical seeds give identical streams
// on every conforming implementation. Doubles are derived from the raw 64-bit
// output directly (53 high bits) instead of std::uniform_real_distribution,
// whose output is not portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 gen_;
};

// i-th output of a splitmix64 stream started at `seed`. Used to derive
// per-trial subseeds so that parallel Monte Carlo runs are reproducible
// regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bdc

#endif
