#include "helpers.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/random_complex.hpp"

#include <doctest.h>

using namespace hodgekit;
using testing_support::random_matrix;

namespace {

long signed_sum(const CohomologyTable& t, int n) {
  long s = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) s += ((p + q) % 2 ? -1 : 1) * static_cast<long>(t.dim(Bidegree{p, q}));
  return s;
}

}  // namespace

TEST_CASE("random bicomplexes are deterministic per seed") {
  std::mt19937_64 a(kDefaultSeed), b(kDefaultSeed), c(kDefaultSeed + 1);
  Bicomplex x = random_bicomplex(a), y = random_bicomplex(b), z = random_bicomplex(c);
  CHECK(x == y);
  CHECK_FALSE(x == z);
}

TEST_CASE("properties of random bicomplexes") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 60; ++i) {
    CAPTURE(i);
    RandomBicomplexOptions opts;
    opts.n = 1 + i % 3;
    opts.pieces = 3 + i % 6;
    opts.gaussian = i % 2 == 0;
    Bicomplex b = random_bicomplex(rng, opts);
    const int n = b.n();

    CHECK(validate(b).ok);
    CHECK(verify_five_term(b).exact);
    FrolicherReport fr = frolicher_check(b);
    for (const auto& row : fr.rows) CHECK(row.betti <= row.hodge_sum);

    long chi = euler_characteristic(b.space);
    CHECK(euler_characteristic(derham(b)) == chi);
    CHECK(signed_sum(dolbeault(b), n) == chi);

    for (const auto& map : natural_maps(b)) CHECK(map.rank + map.kernel_dim == map.matrix.cols());
  }
}

TEST_CASE("delbar-only random complexes") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    RandomBicomplexOptions opts;
    opts.has_del = false;
    opts.n = 2;
    Bicomplex b = random_bicomplex(rng, opts);
    CHECK_FALSE(b.has_del);
    CHECK(signed_sum(dolbeault(b), b.n()) == euler_characteristic(b.space));
    CHECK_THROWS_AS(derham(b), MissingDifferential);
  }
}

TEST_CASE("coset representatives have unit coordinates") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 10; ++i) {
    Bicomplex b = random_bicomplex(rng);
    for (const auto& [slot, q] : bott_chern(b).slots) {
      const auto& reps = q.representatives();
      for (std::size_t k = 0; k < reps.size(); ++k) {
        Vector e(reps.size());
        e[k] = 1;
        CHECK(q.coordinates(reps[k]) == e);
      }
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    ExactMatrix m = random_matrix(rng, 4, 4, 2);
    if (rank(m) < 4) {
      CHECK_THROWS_AS(inverse(m), DegenerateSystem);
      continue;
    }
    CHECK(inverse(m) * m == ExactMatrix::identity(4));
  }
  CHECK_THROWS_AS(inverse(ExactMatrix{{1, 2}, {2, 4}}), DegenerateSystem);
}
