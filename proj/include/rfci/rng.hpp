#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rfci/math_util.hpp"

namespace rfci {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
}

// Deterministic random stream. fork() derives an independent child stream
// from the creation seed without touching this stream's state, so forked
// work units can run in any order or thread and still reproduce.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  RngStream fork(std::uint64_t index) const { return RngStream(derive_seed(seed_, index)); }

  RngStream fork(std::uint64_t a, std::uint64_t b) const { return fork(a).fork(b); }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0,1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1); never returns an endpoint.
  double uniform_open() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer on [0, bound); bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  // Standard normal via inverse CDF.
  double normal() { return normal_quantile(uniform_open()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct values from {0,...,n-1}, in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace rfci
