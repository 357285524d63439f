#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "kfsa/types.hpp"

namespace kfsa {

// Seeded mt19937_64 with uniform doubles built by scaling 53-bit draws.
// std::uniform_*_distribution is implementation-defined, so sampling goes
// through this class to keep streams identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  Index below(Index n) {
    Index i = static_cast<Index>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // First k entries of a Fisher-Yates shuffle of 0..n-1.
  IndexList sample_without_replacement(Index n, Index k) {
    IndexList pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), Index{0});
    for (Index i = 0; i < k; ++i) {
      Index j = i + below(n - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
  }

  IndexList permutation(Index n) { return sample_without_replacement(n, n); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Draws k distinct indices with probability proportional to the (nonnegative)
// weights, removing each chosen index from the pool.
inline IndexList weighted_sample_without_replacement(Rng& rng, Vector weights, Index k) {
  const Index n = weights.size();
  require(k >= 0 && k <= n, "sample size out of range");
  require((weights.array() >= 0.0).all(), "weights must be nonnegative");
  IndexList chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  double total = weights.sum();
  for (Index draw = 0; draw < k; ++draw) {
    Index pick = -1;
    if (total > 0.0) {
      const double u = rng.uniform01() * total;
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
    }
    if (pick < 0) {
      // all mass exhausted (or rounding ate the tail): take the lowest unused index
      for (Index i = 0; i < n; ++i) {
        if (weights[i] >= 0.0 && std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
          pick = i;
          break;
        }
      }
    }
    total -= weights[pick];
    weights[pick] = -1.0;  // mark used
    chosen.push_back(pick);
  }
  return chosen;
}

}  // namespace kfsa
