#pragma once

#include <cstdint>

#include "mqmi/common.hpp"

namespace mqmi {

/// Small deterministic generator (splitmix64 core, Box-Muller Gaussians).
/// State is explicit everywhere: same seed, same stream, on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();
  Complex complex_gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Per-sample seed derived from a master seed, stable across runs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace mqmi
