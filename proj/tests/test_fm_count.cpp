#include <doctest.h>

#include <algorithm>
#include <random>

#include "k3lat/errors.hpp"
#include "k3lat/fm_count.hpp"
#include "support.hpp"

using namespace k3lat;
using testing::lat;

namespace {

std::vector<Permutation> symmetric_group(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::int32_t>(i);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("isometries in a box satisfy the Gram equation") {
  const auto l = lat({{2, 1}, {1, -2}});
  std::size_t n = 0;
  for_each_isometry(l, l, 4, [&](const IntMatrix& m) {
    CHECK(m.transpose() * l.gram() * m == l.gram());
    ++n;
    return true;
  });
  CHECK(n >= 4);
  std::size_t direct = 0;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          IntMatrix m{{a, b}, {c, d}};
          direct += m.transpose() * l.gram() * m == l.gram();
        }
  CHECK(n == direct);
}

TEST_CASE("find_isometry between equivalent Gram matrices") {
  const auto l = lat({{2, 4}, {4, 2}});
  const auto m = change_basis(l, IntMatrix{{1, 1}, {0, 1}});
  const auto f = find_isometry(m, l, 5);
  REQUIRE(f.has_value());
  CHECK(f->transpose() * l.gram() * *f == m.gram());
  CHECK_FALSE(find_isometry(lat({{2, 2}, {2, -4}}), lat({{-2, 2}, {2, 4}}), 5).has_value());
}

TEST_CASE("double cosets match the direct orbit count") {
  const auto s3 = symmetric_group(3);
  const std::vector<Permutation> id{{0, 1, 2}};
  CHECK(double_coset_count(s3, id, id) == 6);
  CHECK(double_coset_count(s3, s3, id) == 1);
  const auto z2 = close_group({{1, 0, 2}}, 3);
  const auto z2b = close_group({{0, 2, 1}}, 3);
  CHECK(double_coset_count(s3, z2, id) == 3);
  CHECK(double_coset_count(s3, z2, z2b) == oracle::double_cosets(s3, z2, z2b));

  const auto s4 = symmetric_group(4);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) {
    std::vector<Permutation> g1, g2;
    for (int k = 0; k < 1 + t % 2; ++k) {
      g1.push_back(s4[rng() % s4.size()]);
      g2.push_back(s4[rng() % s4.size()]);
    }
    const auto h1 = close_group(g1, 4), h2 = close_group(g2, 4);
    CHECK(double_coset_count(s4, h1, h2) == oracle::double_cosets(s4, h1, h2));
  }
}

TEST_CASE("double cosets refuse non-subgroups") {
  const auto s3 = symmetric_group(3);
  const std::vector<Permutation> not_closed{{0, 1, 2}, {1, 2, 0}};
  CHECK_THROWS_AS(double_coset_count(s3, not_closed, {{0, 1, 2}}), PreconditionFailed);
}

TEST_CASE("close_group") {
  const auto g = close_group({{1, 2, 0}, {1, 0, 2}}, 3);
  CHECK(g.size() == 6);
  CHECK(close_group({}, 3).size() == 1);
  CHECK_THROWS_AS(close_group({{1, 2, 3, 4, 5, 6, 7, 0}, {1, 0, 2, 3, 4, 5, 6, 7}}, 8, 100), BudgetExceeded);
}

TEST_CASE("isometry image grows with the search bound and contains -id") {
  const auto l = lat({{2, 4}, {4, 2}});
  const auto small = isometry_image(l, 1);
  const auto big = isometry_image(l, 5);
  CHECK(small.group.size() <= big.group.size());
  CHECK(big.orthogonal_order == 4);
  CHECK(big.saturated);
  const auto a = discriminant_group(l);
  CHECK(std::binary_search(big.group.begin(), big.group.end(), negation_automorphism(a)));
}

TEST_CASE("partner counts for the two rank-2 branch lattices") {
  for (const auto& l : {lat({{2, 4}, {4, 2}}), lat({{4, 0}, {0, -2}})}) {
    const auto r = fm_partner_count(FMCountProblem{l, {l}, {}, 5, kDefaultBudget});
    CHECK(r.count == 1);
    CHECK(r.ns_index == 0);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].saturated);
    CHECK(r.summands[0].hodge_order == 2);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("partner count after a change of basis: exact when saturated, flagged otherwise") {
  std::mt19937_64 rng(52);
  std::size_t exact = 0;
  for (int t = 0; t < 8; ++t) {
    const auto l = change_basis(lat({{2, 4}, {4, 2}}), testing::random_unimodular(rng, 2, 3));
    const auto r = fm_partner_count(FMCountProblem{l, {l}, {}, 5, kDefaultBudget});
    CHECK(r.count >= 1);
    if (r.summands[0].saturated) {
      CHECK(r.count == 1);
      CHECK(r.warnings.empty());
      ++exact;
    } else {
      CHECK_FALSE(r.warnings.empty());
    }
  }
  CHECK(exact >= 6);
  // a skewed basis whose extra isometry has entries beyond the box
  const auto skew = lat({{26, 60}, {60, 138}});
  const auto r = fm_partner_count(FMCountProblem{skew, {skew}, {}, 5, kDefaultBudget});
  CHECK_FALSE(r.summands[0].saturated);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("a trivial Hodge image counts the full coset space") {
  const auto l = lat({{2, 4}, {4, 2}});
  const auto a = discriminant_group(l);
  HodgeImageSpec hodge{HodgeImageSpec::Mode::Explicit, {identity_automorphism(a)}};
  const auto r = fm_partner_count(FMCountProblem{l, {l}, hodge, 5, kDefaultBudget});
  // |O(N) image| = |O(A_N)| = 4, so O(N) \ O(A_N) / {id} is a single coset
  CHECK(r.count == 1);
  CHECK(r.summands[0].hodge_order == 1);
}

TEST_CASE("fm count preconditions") {
  const auto l = lat({{2, 4}, {4, 2}});
  CHECK_THROWS_AS(fm_partner_count(FMCountProblem{l, {lat({{4, 0}, {0, -2}})}, {}, 5, kDefaultBudget}),
                  PreconditionFailed);
  CHECK_THROWS_AS(fm_partner_count(FMCountProblem{l, {}, {}, 5, kDefaultBudget}), PreconditionFailed);
  const auto a = discriminant_group(l);
  HodgeImageSpec bad{HodgeImageSpec::Mode::Explicit, {FQMAutomorphism{{a.zero(), a.zero()}}}};
  CHECK_THROWS_AS(fm_partner_count(FMCountProblem{l, {l}, bad, 5, kDefaultBudget}), PreconditionFailed);
}
