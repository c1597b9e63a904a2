#include <doctest.h>

#include <random>

#include "k3lat/binary_forms.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/fm_count.hpp"
#include "k3lat/genus.hpp"
#include "support.hpp"

using namespace k3lat;
using testing::lat;

TEST_CASE("same_genus is invariant under change of basis") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto g = testing::random_even_gram(rng, n, 4);
    if (std::abs(oracle::det(g)) > 64) continue;
    const auto l = lat(g);
    CHECK(same_genus(l, change_basis(l, testing::random_unimodular(rng, n))));
  }
}

TEST_CASE("same_genus separates signature and discriminant") {
  CHECK_FALSE(same_genus(lat({{2, 1}, {1, 2}}), lat({{2, 1}, {1, -2}})));
  CHECK_FALSE(same_genus(lat({{2, 0}, {0, -2}}), lat({{2, 1}, {1, -2}})));
  CHECK_FALSE(same_genus(lat({{2, 0}, {0, -2}}), lat({{2}})));
  CHECK(same_genus(lat({{2, 4}, {4, 2}}), lat({{2, 4}, {4, 2}})));
}

TEST_CASE("genus representatives: every lattice class appears in exactly one genus") {
  for (long d : {5L, 8L, 12L, 13L, 17L, 21L, 24L, 28L, 32L, 40L, 45L, 60L, 65L}) {
    const auto cc = class_count(d);
    std::size_t covered = 0;
    std::vector<std::vector<IntegerLattice>> genera;
    for (const auto& cls : cc.improper_classes) {
      const auto l = to_lattice(cc.cycles[cls.front()].front());
      bool known = false;
      for (const auto& gen : genera) known = known || same_genus(gen.front(), l);
      if (known) continue;
      const auto reps = genus_representatives_rank2(l);
      CHECK(reps.front() == l);
      for (const auto& r : reps) CHECK(same_genus(r, l));
      // pairwise non-isometric
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(find_isometry(reps[i], reps[j], 6).has_value());
      covered += reps.size();
      genera.push_back(reps);
    }
    CAPTURE(d);
    CHECK(covered == cc.lattice_classes);
  }
}

TEST_CASE("genus uniqueness of the two rank-2 branch lattices") {
  CHECK(genus_representatives_rank2(lat({{2, 4}, {4, 2}})).size() == 1);
  CHECK(genus_representatives_rank2(lat({{4, 0}, {0, -2}})).size() == 1);
}

TEST_CASE("genus representatives refuse what they cannot do") {
  CHECK_THROWS_AS(genus_representatives_rank2(lat({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}})), PreconditionFailed);
  CHECK_THROWS_AS(genus_representatives_rank2(lat({{2, 1}, {1, 2}})), PreconditionFailed);
}
