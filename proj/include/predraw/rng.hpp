#pragma once

#include <cstdint>
#include <random>

#include "predraw/linalg.hpp"
#include "predraw/rational.hpp"

namespace predraw {

// Deterministic seeded generator. Draws go through rejection sampling
// rather than std distributions so that sequences are identical across
// standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Random exact rational with numerator in [-99, 99] and denominator in
// [1, 99]; used by all numeric property checks.
Rational random_rational(SeededRng& rng);

// Random integer matrix with determinant exactly 1: a product of at most
// six elementary shear and signed-swap matrices with entries in [-5, 5].
// Deterministic for a fixed seed.
IntMat random_unimodular(int d, std::uint64_t seed);

}  // namespace predraw
