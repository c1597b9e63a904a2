#include <doctest.h>

#include <random>

#include "k3lat/errors.hpp"
#include "k3lat/lattice.hpp"
#include "support.hpp"

using namespace k3lat;
using testing::ivec;
using testing::lat;

TEST_CASE("constructor rejects invalid Gram matrices") {
  CHECK_THROWS_AS(lat({{2, 1}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(lat({{1, 0}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(lat({{2, 2}, {2, 2}}), InvalidInput);
  CHECK_THROWS_AS(lat({{2, 0}}), InvalidInput);
  CHECK_THROWS_AS(IntegerLattice(IntMatrix(0, 0)), InvalidInput);
}

TEST_CASE("invariants agree with the characteristic-polynomial oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto g = testing::random_even_gram(rng, n, 6);
    const auto inv = basic_invariants(lat(g));
    const auto [p, m] = oracle::signature(g);
    CHECK(inv.determinant == Integer(static_cast<long>(oracle::det(g))));
    CHECK(inv.discriminant == abs(inv.determinant));
    CHECK(inv.signature.positive == static_cast<std::size_t>(p));
    CHECK(inv.signature.negative == static_cast<std::size_t>(m));
    CHECK(inv.even);
  }
}

TEST_CASE("pairing is bilinear and symmetric") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const auto l = lat(testing::random_even_gram(rng, 3, 6));
    IntVector u(3), v(3), w(3);
    for (std::size_t i = 0; i < 3; ++i) {
      u[i] = c(rng);
      v[i] = c(rng);
      w[i] = c(rng);
    }
    IntVector uv(3);
    for (std::size_t i = 0; i < 3; ++i) uv[i] = 2 * u[i] + v[i];
    CHECK(inner(l, u, w) == inner(l, w, u));
    CHECK(inner(l, uv, w) == 2 * inner(l, u, w) + inner(l, v, w));
    CHECK(square(l, u) % 2 == 0);
  }
  const auto l = lat({{2, 1}, {1, 2}});
  CHECK_THROWS_AS(inner(l, ivec({1}), ivec({1, 0})), InvalidInput);
}

TEST_CASE("divisibility divides every pairing and is attained on a dual basis") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto l = lat(testing::random_even_gram(rng, n, 5));
    IntVector v(n);
    for (auto& x : v) x = c(rng);
    if (gcd_of(v) == 0) continue;
    const Integer d = divisibility(l, v);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      const Integer p = inner(l, v, e);
      CHECK(p % d == 0);
      g = gcd(g, p);
    }
    CHECK(g == d);
  }
  CHECK_THROWS_AS(divisibility(lat({{2, 0}, {0, -2}}), ivec({0, 0})), PreconditionFailed);
}

TEST_CASE("represent matches a direct scan and is sorted") {
  const auto l = lat({{2, 4}, {4, 2}});
  for (long n : {-6L, -2L, 0L, 2L, 8L}) {
    std::vector<IntVector> expect;
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        if (2 * x * x + 8 * x * y + 2 * y * y == n) expect.push_back(ivec({x, y}));
    CHECK(represent(l, n, 6) == expect);
  }
  CHECK_THROWS_AS(represent(l, 2, 0), PreconditionFailed);
}

TEST_CASE("a congruence obstruction rules out every vector in a box") {
  std::mt19937_64 rng(24);
  int obstructed = 0;
  for (int t = 0; t < 120; ++t) {
    const auto l = lat(testing::random_even_gram(rng, 2, 6));
    for (long n = -8; n <= 8; n += 2)
      for (std::int64_t m : {2, 3, 4, 8}) {
        if (!congruence_obstruction(l, n, m)) continue;
        ++obstructed;
        CHECK(represent(l, n, 12).empty());
      }
  }
  CHECK(obstructed > 0);
}

TEST_CASE("congruence obstruction: conventions") {
  const auto l = lat({{2, 4}, {4, 2}});
  CHECK(congruence_obstruction(l, 3, 5));  // odd squares never occur
  CHECK(congruence_obstruction(l, -2, 4));
  CHECK_FALSE(congruence_obstruction(l, 2, 4));
  CHECK_THROWS_AS(congruence_obstruction(l, 2, 1), PreconditionFailed);
}

TEST_CASE("primitive completion") {
  const auto l = lat({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  const auto u = primitive_and_complete(l, ivec({3, 5, -2}));
  CHECK(abs(determinant(u)) == 1);
  CHECK(u.column(0) == ivec({3, 5, -2}));
  try {
    primitive_and_complete(l, ivec({4, 6, 2}));
    FAIL("expected NotPrimitive");
  } catch (const NotPrimitive& e) {
    CHECK(e.content() == "2");
  }
}

TEST_CASE("change of basis preserves the invariants") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto l = lat(testing::random_even_gram(rng, n, 5));
    const auto l2 = change_basis(l, testing::random_unimodular(rng, n));
    const auto a = basic_invariants(l), b = basic_invariants(l2);
    CHECK(a.determinant == b.determinant);
    CHECK(a.signature == b.signature);
  }
  const auto l = lat({{2, 1}, {1, -2}});
  CHECK(negated(l).gram() == IntMatrix{{-2, -1}, {-1, 2}});
  CHECK(is_indefinite(l));
  CHECK_FALSE(is_indefinite(lat({{2, 1}, {1, 2}})));
}
