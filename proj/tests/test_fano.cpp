#include <doctest.h>

#include "k3lat/errors.hpp"
#include "k3lat/fano.hpp"
#include "support.hpp"

using namespace k3lat;
using testing::ivec;
using testing::lat;

TEST_CASE("family ids") {
  CHECK(parse_family("2-6b") == FamilyId::F2_6b);
  CHECK(parse_family("2-6(b)") == FamilyId::F2_6b);
  CHECK(parse_family("VERRA4") == FamilyId::Verra4);
  CHECK(parse_family("3-1") == FamilyId::F3_1);
  CHECK_THROWS_AS(parse_family("2-7"), InvalidInput);
  for (auto f : {FamilyId::F2_6b, FamilyId::F2_8, FamilyId::F3_1, FamilyId::Verra4})
    CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("intersection tensors are symmetric and sized by the Picard rank") {
  for (auto f : {FamilyId::F2_6b, FamilyId::F2_8, FamilyId::F3_1, FamilyId::Verra4}) {
    const auto v = base_variety(f);
    std::size_t expect = 1;
    for (std::size_t i = 0; i < v.arity; ++i) expect *= v.picard_rank();
    CHECK(v.tensor.size() == expect);
    CHECK(tensor_symmetric(v));
  }
}

TEST_CASE("branch lattices are contractions of the tensor") {
  for (auto f : {FamilyId::F2_6b, FamilyId::F2_8, FamilyId::F3_1}) {
    const auto v = base_variety(f);
    const auto l = ns_lattice_of_branch(f);
    const std::size_t r = v.picard_rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < r; ++k) s += v.at({i, j, k}) * v.branch_class[k];
        CHECK(l.gram()(i, j) == s);
      }
  }
  CHECK(ns_lattice_of_branch(FamilyId::F2_6b).gram() == IntMatrix{{2, 4}, {4, 2}});
  CHECK(ns_lattice_of_branch(FamilyId::F2_8).gram() == IntMatrix{{4, 0}, {0, -2}});
  CHECK(ns_lattice_of_branch(FamilyId::F3_1).gram() == IntMatrix{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  CHECK_THROWS_AS(ns_lattice_of_branch(FamilyId::Verra4), PreconditionFailed);
}

TEST_CASE("Verra cubic against the closed form, including large arguments") {
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      const auto v = verra_cubic(a, b);
      CHECK(v.closed_form == 6 * a * b * (a + b));
      CHECK(v.matches());
    }
  const Integer big("123456789012345678901");
  CHECK(verra_cubic(big, -big + 7).matches());
}

TEST_CASE("square-2 completion: every primitive root within bound 10, both roots") {
  const auto l = lat({{2, 4}, {4, 2}});
  std::size_t n = 0;
  for (const auto& h : represent(l, 2, 10)) {
    if (gcd_of(h) != 1) continue;
    for (bool other : {false, true}) {
      const auto hp = complete_square2_basis(l, h, other);
      IntMatrix b{{h[0], hp[0]}, {h[1], hp[1]}};
      CHECK(b.transpose() * l.gram() * b == l.gram());
    }
    ++n;
  }
  CHECK(n > 0);
  CHECK_THROWS_AS(complete_square2_basis(l, ivec({1, 1})), PreconditionFailed);
}

TEST_CASE("isotropic completion: every primitive isotropic vector within bound 5") {
  const auto l = lat({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  std::size_t n = 0;
  for (const auto& f : represent(l, 0, 5)) {
    if (gcd_of(f) != 1) continue;
    const auto [fp, fpp] = complete_isotropic_basis(l, f);
    IntMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      b(i, 0) = f[i];
      b(i, 1) = fp[i];
      b(i, 2) = fpp[i];
    }
    CHECK(b.transpose() * l.gram() * b == l.gram());
    CHECK(abs(determinant(b)) == 1);
    ++n;
  }
  CHECK(n > 10);
  CHECK_THROWS_AS(complete_isotropic_basis(l, ivec({2, 0, 0})), NotPrimitive);
  CHECK_THROWS_AS(complete_isotropic_basis(l, ivec({1, 1, 0})), PreconditionFailed);
}
