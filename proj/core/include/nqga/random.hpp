#pragma once

#include <cstdint>
#include <random>

namespace nqga {

/// Seeded random stream. Single owner; give each concurrent run its own instance.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), built from the top 53 bits so 1.0 is never produced.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Fires iff uniform01() < p, so p = 0 never fires and p = 1 always does.
  bool gate(double p) { return uniform01() < p; }

  /// Uniform in [0, bound).
  std::size_t index(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
  }

  engine_type& engine() noexcept { return engine_; }

 private:
  engine_type engine_;
};

}  // namespace nqga
