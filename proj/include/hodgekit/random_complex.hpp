#pragma once

#include "hodgekit/bicomplex.hpp"

#include <cstdint>
#include <random>

namespace hodgekit {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RandomBicomplexOptions {
  int n = 2;
  /// Number of indecomposable pieces (dots, arrows, squares) summed together.
  int pieces = 6;
  /// Entries of the basis change lie in [-max_entry, max_entry] (real and imaginary parts).
  int max_entry = 2;
  bool has_del = true;
  /// Allow non-real Gaussian entries in the basis change.
  bool gaussian = true;
};

/// A valid bicomplex built as a direct sum of small indecomposable pieces
/// placed on the n-grid, then disguised by a random invertible change of
/// basis in every slot. Deterministic for a given generator state.
Bicomplex random_bicomplex(std::mt19937_64& rng, const RandomBicomplexOptions& opts = {});

/// Inverse of a square matrix; throws DegenerateSystem when singular.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace hodgekit
