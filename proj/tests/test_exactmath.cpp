#include "helpers.hpp"

#include "hodgekit/errors.hpp"
#include "hodgekit/subspace.hpp"

#include <doctest.h>

using namespace hodgekit;
using testing_support::random_low_rank;
using testing_support::random_matrix;

TEST_CASE("gaussian rationals parse and print canonically") {
  CHECK(GaussianRational::parse("3") == GaussianRational(3));
  CHECK(GaussianRational::parse("-1/2") == GaussianRational::fraction(-1, 2));
  CHECK(GaussianRational::parse("2i") == GaussianRational(0, 2));
  CHECK(GaussianRational::parse("-i") == GaussianRational(0, -1));
  CHECK(GaussianRational::parse("1/2-3i") == GaussianRational(mpq_class(1, 2), -3));
  CHECK(GaussianRational::parse("(1+2i)") == GaussianRational(1, 2));
  CHECK(GaussianRational::fraction(2, 4) == GaussianRational::fraction(1, 2));
  for (const char* s : {"0", "i", "-1/2i", "1+2i", "-3/4-5/6i", "7"})
    CHECK(GaussianRational::parse(s).str() == s);
  CHECK_THROWS(GaussianRational::parse("1/0"));
  CHECK_THROWS(GaussianRational::parse("abc"));
  CHECK_THROWS(GaussianRational::fraction(1, 0));
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational a(1, 2), b(mpq_class(1, 3), -1);
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK((a + b) - b == a);
  CHECK(a * a.conj() == GaussianRational(a.norm()));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(i_power(0) == GaussianRational(1));
  CHECK(i_power(3) == GaussianRational(0, -1));
  CHECK(i_power(-1) == GaussianRational(0, -1));
  CHECK(i_power(6) == GaussianRational(-1));
  CHECK_THROWS(GaussianRational(0).inverse());
}

TEST_CASE("rref, rank and solve") {
  ExactMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  RowEchelon e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == ExactMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  CHECK(rank(m) == 2);
  Vector x;
  CHECK(solve(m, Vector{4, 8, 2}, x));
  CHECK(m * x == Vector{4, 8, 2});
  CHECK_FALSE(solve(m, Vector{1, 0, 0}, x));
  CHECK(rank(ExactMatrix(0, 4)) == 0);
  ExactMatrix c{{GaussianRational::i(), 1}, {-1, GaussianRational::i()}};
  CHECK(rank(c) == 1);  // second row = i * first
}

TEST_CASE("subspaces are canonical") {
  std::vector<Vector> a = {{1, 1, 0}, {0, 1, 1}};
  std::vector<Vector> b = {{1, 2, 1}, {1, 0, -1}};
  CHECK(Subspace::span(3, a) == Subspace::span(3, b));
  CHECK(Subspace::span(3, a).dim() == 2);
  CHECK_FALSE(Subspace::span(3, a).contains(Vector{1, 0, 0}));
  CHECK(Subspace::span(3, a).contains(Vector{2, 3, 1}));
  auto coords = Subspace::span(3, a).coordinates(Vector{2, 3, 1});
  REQUIRE(coords);
  CHECK(coords->size() == 2);
  CHECK(Subspace::full(3).dim() == 3);
}

TEST_CASE("kernel and image obey rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6, inner = trial % 4;
    ExactMatrix m = random_low_rank(rng, rows, cols, inner);
    Subspace ker = kernel_basis(m), im = image_basis(m);
    CHECK(ker.dim() + im.dim() == cols);
    CHECK(im.dim() == rank(m));
    for (const auto& v : ker.basis()) CHECK(is_zero(m * v));
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 5;
    ExactMatrix a = random_low_rank(rng, n, 1 + trial % 3, 1 + trial % 3);
    ExactMatrix b = random_low_rank(rng, n, 1 + (trial / 3) % 3, 1 + (trial / 2) % 3);
    if (trial % 4 == 0) b = hstack(b, a);
    Subspace u = image_basis(a), v = image_basis(b);
    Subspace s = subspace_sum(u, v), i = subspace_intersect(u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
  }
}

TEST_CASE("quotients have canonical representatives") {
  Subspace num = Subspace::full(3);
  std::vector<Vector> d = {{1, 1, 0}};
  Subspace den = Subspace::span(3, d);
  Quotient q(num, den);
  CHECK(q.dim() == 2);
  // v and v + den vector are the same class
  CHECK(q.coordinates(Vector{1, 2, 3}) == q.coordinates(Vector{2, 3, 3}));
  Vector c = q.coordinates(Vector{0, 1, 5});
  CHECK(q.coordinates(q.lift(c)) == c);
  CHECK_THROWS_AS(Quotient(den, num), PreconditionError);
}

TEST_CASE("induced quotient maps") {
  // Shift operator on C^3 with num = C^3, den = span(e3): induced map is well defined.
  ExactMatrix shift{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  std::vector<Vector> e3 = {{0, 0, 1}};
  Quotient q(Subspace::full(3), Subspace::span(3, e3));
  ExactMatrix m = induced_quotient_map(shift, q, q);
  CHECK(m.rows() == 2);
  CHECK(rank(m) == 1);
  // A map not preserving the denominator is rejected.
  ExactMatrix back{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(induced_quotient_map(back, q, q), PreconditionError);
}

TEST_CASE("induced map of a composition is the composition of induced maps") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    // Upper-triangular maps preserve the flag span(e1) < span(e1, e2, e3).
    std::size_t n = 4;
    auto flag_map = [&] {
      ExactMatrix m = random_matrix(rng, n, n, 2);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (r > c) m(r, c) = 0;
      return m;
    };
    auto flag = [&](std::size_t k) {
      std::vector<Vector> vs;
      for (std::size_t j = 0; j < k; ++j) {
        Vector v(n);
        v[j] = 1;
        vs.push_back(v);
      }
      return Subspace::span(n, vs);
    };
    Quotient q(flag(3), flag(1));
    ExactMatrix f = flag_map(), g = flag_map();
    CHECK(induced_quotient_map(g * f, q, q) == induced_quotient_map(g, q, q) * induced_quotient_map(f, q, q));
  }
}
