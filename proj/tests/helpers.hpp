#pragma once

#include "hodgekit/models.hpp"

#include <json.hpp>

#include <fstream>
#include <random>

namespace testing_support {

using namespace hodgekit;

inline GaussianRational small_entry(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return GaussianRational(mpq_class(d(rng)), mpq_class(d(rng)));
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 3) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_entry(rng, bound);
  return m;
}

/// rows x cols matrix of rank at most `inner`.
inline ExactMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  return random_matrix(rng, rows, inner) * random_matrix(rng, inner, cols);
}

inline BuiltModel built(const std::string& name) { return build_model(*find_in_catalog(name)); }

inline const nlohmann::json& golden() {
  static const nlohmann::json g = [] {
    std::ifstream in(HODGEKIT_GOLDEN);
    return nlohmann::json::parse(in);
  }();
  return g;
}

}  // namespace testing_support
