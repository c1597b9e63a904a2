#include <doctest.h>

#include <random>

#include "k3lat/errors.hpp"
#include "k3lat/numeric.hpp"
#include "k3lat/smith.hpp"
#include "support.hpp"

using namespace k3lat;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto m = random_matrix(rng, n, n, 5);
    CHECK(determinant(m) == Integer(static_cast<long>(oracle::det(to_mat(m)))));
  }
}

TEST_CASE("inverse is a two-sided inverse") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(rng, 3, 3, 4);
    if (determinant(m) == 0) continue;
    const auto q = to_rational(m);
    CHECK(q * inverse(q) == RatMatrix::identity(3));
  }
}

TEST_CASE("scalar helpers") {
  CHECK(isqrt(Integer(0)) == 0);
  CHECK(isqrt(Integer(15)) == 3);
  CHECK(isqrt(Integer(16)) == 4);
  CHECK(is_square(Integer(49)));
  CHECK_FALSE(is_square(Integer(12)));
  CHECK(mod_floor(Integer(-7), Integer(4)) == 1);
  CHECK(mod_floor(std::int64_t{-8}, std::int64_t{4}) == 0);
  CHECK(mod_rational(Rational(-1, 3), Integer(2)) == Rational(5, 3));
  Integer x, y;
  const Integer g = ext_gcd(Integer(240), Integer(46), x, y);
  CHECK(g == 2);
  CHECK(240 * x + 46 * y == g);
  CHECK(gcd_of(testing::ivec({6, -9, 15})) == 3);
  CHECK(binomial(Integer(5), 2) == 10);
  CHECK(binomial(Integer(-2), 2) == 3);
}

TEST_CASE("smith form: transforms are unimodular and the diagonal divides down") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    const auto a = random_matrix(rng, r, c, 6);
    const auto s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    CHECK(s.right * s.right_inverse == IntMatrix::identity(c));
    const std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      CHECK(s.diagonal(i, i) >= 0);
      if (s.diagonal(i, i) != 0) CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
      else CHECK(s.diagonal(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("hermite basis spans the same lattice as its generators") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    auto gens = random_matrix(rng, n, n + 2, 5);
    for (std::size_t i = 0; i < n; ++i) gens(i, i) += 11;  // full row rank
    const auto b = column_hermite_basis(gens);
    REQUIRE(b.rows() == n);
    REQUIRE(b.cols() == n);
    // every generator is an integer combination of the basis columns
    const auto binv = inverse(to_rational(b));
    const auto coeffs = binv * to_rational(gens);
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
      for (std::size_t j = 0; j < coeffs.cols(); ++j) CHECK(coeffs(i, j).get_den() == 1);
    // and the covolume matches the gcd of maximal minors, via the oracle HNF
    const auto ob = oracle::hnf_basis(to_mat(gens));
    CHECK(abs(determinant(b)) == Integer(static_cast<long>(std::abs(oracle::det(ob)))));
    // canonical: lower triangular, positive diagonal
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(b(i, i) > 0);
      for (std::size_t j = i + 1; j < n; ++j) CHECK(b(i, j) == 0);
    }
  }
}

TEST_CASE("complete_to_unimodular keeps the given columns") {
  std::mt19937_64 rng(15);
  int done = 0;
  for (int t = 0; t < 300 && done < 60; ++t) {
    const auto v = random_matrix(rng, 4, 1, 7);
    if (gcd_of(v.column(0)) != 1) continue;
    const auto u = complete_to_unimodular(v);
    CHECK(abs(determinant(u)) == 1);
    CHECK(u.column(0) == v.column(0));
    ++done;
  }
  CHECK(done == 60);
  IntMatrix bad{{2}, {4}, {6}};
  CHECK_THROWS_AS(complete_to_unimodular(bad), NotPrimitive);
}
