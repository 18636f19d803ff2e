#include "frobcov/rng.hpp"

namespace frobcov {
namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed + kGolden) ^ (stream * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return splitmix64(key_ + counter_ * kGolden);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_open() { return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53; }

Int CounterRng::uniform_int(Int lo, Int hi) {
  if (lo > hi) throw PreconditionError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == max()) return static_cast<Int>((*this)());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = max() - (max() % n + 1) % n;
  while (true) {
    const std::uint64_t r = (*this)();
    if (r <= limit) return lo + static_cast<Int>(r % n);
  }
}

}  // namespace frobcov
