#pragma once

// Rank modulo a random 62-bit prime, used as a fast pre-check before exact
// elimination. Never a substitute for the exact answer.

#include <cstdint>
#include <vector>

#include "nilhecke/algebra.hpp"

namespace nilhecke {

std::size_t modular_rank(const std::vector<RationalSparse>& vectors, std::uint64_t prime);

class ModularPrecheck {
public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'0f'c0ffeeULL;

  /// Draws the prime from `seed` and calibrates it against exact ranks of the
  /// (twisted) commutator generators for n <= 4 and all presets.
  explicit ModularPrecheck(std::uint64_t seed = kDefaultSeed);

  std::uint64_t prime() const { return prime_; }
  /// False when calibration found a disagreement with exact arithmetic.
  bool accepted() const { return accepted_; }

  std::size_t rank(const std::vector<RationalSparse>& vectors) const { return modular_rank(vectors, prime_); }

private:
  std::uint64_t prime_;
  bool accepted_ = true;
};

}  // namespace nilhecke
