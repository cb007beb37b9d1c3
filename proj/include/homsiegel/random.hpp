#pragma once

#include <cstdint>

namespace homsiegel {

/// Counter-based generator: the value drawn at (seed, stream, counter) is a
/// pure function of those three integers, so per-sample streams give
/// identical results regardless of how samples are distributed over threads.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller, no cached spare).
  double normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace homsiegel
