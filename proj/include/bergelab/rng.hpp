#ifndef BERGELAB_RNG_HPP
#define BERGELAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bergelab {

/// SplitMix64 output function. Used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for stream `index` of a master seed. Trials and
/// subtasks each get their own stream so results do not depend on how work
/// is split across threads.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ 0x5851f42d4c957f2dULL) + index);
}

// Thin wrapper over std::mt19937_64 with portable draw helpers. We avoid
// std::uniform_int_distribution / uniform_real_distribution because their
// outputs are not pinned by the standard; the helpers below produce the same
// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform draw from {0, ..., bound-1} by rejection (bound >= 1).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
    const std::uint64_t limit = 0 - rem;            // largest multiple of bound
    std::uint64_t x = gen_();
    while (limit != 0 && x >= limit) x = gen_();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle using next_below (std::shuffle is not portable).
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bergelab

#endif
