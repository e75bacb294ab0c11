#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>

namespace privlabel {

/// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed for a sub-computation (e.g. the i-th parallel execution) derived
/// from a parent seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt ^ 0xD1B54A32D192ED03ull));
}

/// Per-node private randomness r_v.
///
/// Starting state is mix64(master_seed ^ mix64(node_id ^ K)); the sequence
/// is SplitMix64 (state += golden gamma, output = mix of state). For a fixed
/// master seed the starting state is injective in node_id, so distinct nodes
/// get distinct streams, and replaying (master_seed, node_id) reproduces the
/// same draws.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream() = default;
  RandomStream(std::uint64_t master_seed, std::uint64_t node_id)
      : master_seed_(master_seed),
        node_id_(node_id),
        state_(mix64(master_seed ^ mix64(node_id ^ 0x6A09E667F3BCC909ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }

  std::uint64_t next() {
    ++draws_;
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) by rejection.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates; the algorithm is fixed here (std::shuffle is not).
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t node_id() const { return node_id_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t master_seed_ = 0;
  std::uint64_t node_id_ = 0;
  std::uint64_t state_ = 0;
  std::uint64_t draws_ = 0;
};

inline RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t node_id) {
  return RandomStream(master_seed, node_id);
}

}  // namespace privlabel
