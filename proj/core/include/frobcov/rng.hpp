#pragma once

#include <cstdint>
#include <limits>

#include "frobcov/common.hpp"

namespace frobcov {

/// Counter-based generator: output n is a SplitMix64 finalization of
/// key + n * golden-ratio increment. The key is derived from (seed, stream),
/// so every stream can be positioned without replaying earlier draws.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open();
  /// Uniform integer in [lo, hi] (unbiased, rejection on the top range).
  Int uniform_int(Int lo, Int hi);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t z);

}  // namespace frobcov
