#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace blab {

/// xoshiro256++ generator with a splitmix64-expanded seed. Self-contained so
/// that streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double();

  /// Uniform integer in [0, n), unbiased (rejection sampling). n >= 1.
  uint64_t next_below(uint64_t n);

  /// Standard normal via Box-Muller; consumes two uniforms every other call.
  double next_normal();

 private:
  std::array<uint64_t, 4> state_;
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

/// Deterministic seed splitting: every random stream in the project is
/// derived from one master seed plus a purpose tag and an index, so runs are
/// reproducible bit for bit regardless of scheduling.
uint64_t derive_seed(uint64_t master, std::string_view purpose, uint64_t index);

uint64_t splitmix64(uint64_t& state);

}  // namespace blab
