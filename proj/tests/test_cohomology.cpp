#include <doctest.h>

#include <random>

#include "k3lat/cohomology.hpp"
#include "k3lat/errors.hpp"
#include "support.hpp"

using namespace k3lat;

namespace {

std::vector<Integer> as_integers(const std::vector<mpz_class>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Bott dimensions on a single projective space") {
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t d = -9; d <= 9; ++d) CHECK(bott_dims(n, d).dims == as_integers(oracle::h_projective(n, d)));
  CHECK(bott_dims(1, -1).is_zero());
  CHECK(bott_dims(2, -3).dims == std::vector<Integer>{0, 0, 1});
}

TEST_CASE("Kunneth products match the monomial oracle") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> deg(-6, 4);
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {2, 2}, {1, 2}, {3}, {1, 1, 2}}) {
    const ProductSpace s{factors};
    for (int t = 0; t < 60; ++t) {
      LineBundle l(factors.size());
      for (auto& x : l) x = deg(rng);
      const auto h = cohomology(s, l);
      CHECK(h.dims == as_integers(oracle::h_product(factors, l)));
      CHECK(h.euler() == euler_characteristic(s, l));
      CHECK(h.euler() == oracle::chi(oracle::h_product(factors, l)));
    }
  }
}

TEST_CASE("Serre duality: h^i(L) = h^{n-i}(K - L)") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<std::int64_t> deg(-5, 5);
  for (const auto& factors : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {2, 2}, {1, 3}}) {
    const ProductSpace s{factors};
    for (int t = 0; t < 40; ++t) {
      LineBundle l(factors.size()), dual(factors.size());
      for (std::size_t i = 0; i < l.size(); ++i) {
        l[i] = deg(rng);
        dual[i] = -factors[i] - 1 - l[i];
      }
      const auto h = cohomology(s, l), hd = cohomology(s, dual);
      const std::size_t n = static_cast<std::size_t>(s.dimension());
      for (std::size_t i = 0; i <= n; ++i) CHECK(h.dims[i] == hd.dims[n - i]);
    }
  }
}

TEST_CASE("ext tables and collections on P1 x P1 x P1") {
  const ProductSpace p{{1, 1, 1}};
  CHECK(ext_table(p, {0, 0, 0}, {1, 0, 0}).dims == std::vector<Integer>{2, 0, 0, 0});
  const std::vector<LineBundle> eight{{-1, -1, -1}, {0, -1, -1}, {-1, 0, -1}, {-1, -1, 0},
                                      {0, 0, 0},    {1, 0, 0},   {0, 1, 0},   {0, 0, 1}};
  CHECK(check_collection(p, eight).pass);
  CHECK(check_collection(p, {eight.begin() + 4, eight.end()}).pass);
  // reversing a pair with nonzero Hom breaks it
  const auto r = check_collection(p, {{1, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(r.pass);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == "nonzero-backward-ext");
  CHECK(r.violations[0].first == 1);
  CHECK(r.violations[0].second == 0);
  CHECK(check_collection(p, {{0, 0, 0}, {0, 0, 0}}).violations[0].kind == "nonzero-backward-ext");
}

TEST_CASE("right mutations through the structure sheaf") {
  const ProductSpace p{{1, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    LineBundle f(3, 0), g(3, 0);
    f[i] = -1;
    g[i] = 1;
    const auto r = mutation_check(p, {0, 0, 0}, f, g, -1);
    CHECK(r.hom_level);
    CHECK(r.k_level);
    CHECK(r.pass());
    CHECK(r.probes.size() == 7 * 7 * 7);
    CHECK(r.hom_f_e.dims[0] == 2);
    CHECK(r.hom_g_e.is_zero());
    const auto bad = mutation_check(p, {0, 0, 0}, f, g, 0);
    CHECK_FALSE(bad.k_level);
    CHECK_FALSE(bad.pass());
  }
  CHECK_FALSE(mutation_check(p, {0, 0, 0}, {-1, 0, 0}, {0, 1, 0}, -1).pass());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(validate_space(ProductSpace{{}}), InvalidInput);
  CHECK_THROWS_AS(validate_space(ProductSpace{{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(cohomology(ProductSpace{{1, 1}}, {1}), InvalidInput);
}
