#include <doctest.h>

#include <algorithm>
#include <set>

#include "k3lat/binary_forms.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/genus.hpp"
#include "support.hpp"

using namespace k3lat;

namespace {

BinaryQuadraticForm form(long a, long b, long c) { return {a, b, c}; }

oracle::Form plain(const BinaryQuadraticForm& f) { return {f.a.get_si(), f.b.get_si(), f.c.get_si()}; }

std::vector<long> indefinite_discriminants(long max_d) {
  std::vector<long> out;
  for (long d = 5; d <= max_d; ++d)
    if ((d % 4 == 0 || d % 4 == 1) && !is_square(Integer(d))) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("discriminant validation") {
  CHECK_THROWS_AS(require_indefinite_discriminant(9), InvalidInput);
  CHECK_THROWS_AS(require_indefinite_discriminant(7), InvalidInput);
  CHECK_THROWS_AS(require_indefinite_discriminant(-4), InvalidInput);
  CHECK_NOTHROW(require_indefinite_discriminant(5));
  CHECK_THROWS_AS(class_count(16), InvalidInput);
}

TEST_CASE("reduced forms match the square-comparison oracle") {
  for (long d : indefinite_discriminants(400)) {
    std::vector<oracle::Form> got;
    for (const auto& f : enumerate_reduced(d)) {
      CHECK(f.discriminant() == d);
      CHECK(is_reduced(f));
      got.push_back(plain(f));
    }
    CHECK(got == oracle::reduced_forms(d));
  }
}

TEST_CASE("rho permutes the reduced forms and preserves the discriminant") {
  for (long d : indefinite_discriminants(300)) {
    const auto reduced = enumerate_reduced(d);
    std::set<BinaryQuadraticForm> images;
    for (const auto& f : reduced) {
      const auto g = rho(f);
      CHECK(g.discriminant() == d);
      CHECK(is_reduced(g));
      images.insert(g);
    }
    CHECK(images.size() == reduced.size());
  }
}

TEST_CASE("reduction reaches a reduced form from far away") {
  for (const auto& f : {form(1, 101, -7), form(-13, 45, 17), form(6, 1, -50)}) {
    const auto cycle = reduction_cycle(f);
    REQUIRE_FALSE(cycle.empty());
    for (const auto& g : cycle) {
      CHECK(is_reduced(g));
      CHECK(g.discriminant() == f.discriminant());
    }
    CHECK(rho(cycle.back()) == cycle.front());
  }
}

TEST_CASE("proper and improper class counts match a bounded SL2/GL2 search") {
  for (long d : indefinite_discriminants(200)) {
    std::vector<oracle::Form> forms = oracle::reduced_forms(d);
    const auto c = class_count(d);
    CAPTURE(d);
    CHECK(c.proper == oracle::count_classes(forms, 50, false));
    CHECK(c.improper == oracle::count_classes(forms, 50, true));
    CHECK(c.lattice_classes == c.improper);
    std::size_t total = 0;
    for (const auto& cyc : c.cycles) total += cyc.size();
    CHECK(total == forms.size());
  }
}

TEST_CASE("known class counts") {
  const auto c8 = class_count(8);
  CHECK(c8.proper == 1);
  CHECK(c8.lattice_classes == 1);
  CHECK(class_count(12).lattice_classes == 2);
  CHECK(class_count(12).proper == 2);
  const auto c = class_count(12);
  CHECK(proper_class_of(c, form(1, 2, -2)) != proper_class_of(c, form(-1, 2, 2)));
}

TEST_CASE("lattice bridge") {
  const auto f = form(3, 5, -2);
  const auto l = to_lattice(f);
  CHECK(l.gram() == IntMatrix{{6, 5}, {5, -4}});
  CHECK(to_form(l) == f);
  CHECK(-l.determinant() == f.discriminant());
  CHECK_THROWS_AS(to_form(testing::lat({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}})), InvalidInput);
}

TEST_CASE("lattice classes split by genus at discriminant 12") {
  const auto a = testing::lat({{2, 2}, {2, -4}});
  const auto b = testing::lat({{-2, 2}, {2, 4}});
  CHECK_FALSE(same_genus(a, b));
  const auto pa = primary_part(discriminant_group(a), 3);
  const auto pb = primary_part(discriminant_group(b), 3);
  std::set<Rational> qa, qb;
  for (const auto& x : pa.elements())
    if (!pa.is_zero(x)) qa.insert(pa.q(x));
  for (const auto& x : pb.elements())
    if (!pb.is_zero(x)) qb.insert(pb.q(x));
  CHECK(qa == std::set<Rational>{Rational(4, 3)});
  CHECK(qb == std::set<Rational>{Rational(2, 3)});
}
