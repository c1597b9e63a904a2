#include "k3lat/ledger.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "k3lat/binary_forms.hpp"
#include "k3lat/cohomology.hpp"
#include "k3lat/disc_group.hpp"
#include "k3lat/fano.hpp"
#include "k3lat/fm_count.hpp"
#include "k3lat/genus.hpp"

namespace k3lat {
namespace {

using Check = std::function<bool(std::ostringstream&)>;

IntegerLattice gram(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<std::int64_t>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntegerLattice::from_rows(r);
}

FQMElement element(const FiniteQuadraticModule& a, std::initializer_list<Rational> v) {
  return a.element_of(RatVector(v));
}

bool q_is(const FiniteQuadraticModule& a, const FQMElement& x, const Rational& q) { return a.q(x) == q; }

std::vector<std::int64_t> i64(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace

std::vector<LedgerItem> run_ledger() {
  const IntegerLattice l26 = ns_lattice_of_branch(FamilyId::F2_6b);
  const IntegerLattice l28 = ns_lattice_of_branch(FamilyId::F2_8);
  const IntegerLattice l31 = ns_lattice_of_branch(FamilyId::F3_1);
  const Rational half(1, 2);

  std::vector<std::tuple<std::string, std::string, Check>> items;
  auto add = [&](std::string id, std::string claim, Check c) {
    items.emplace_back(std::move(id), std::move(claim), std::move(c));
  };

  add("ns-2-6b", "NS lattice of family 2-6b is [[2,4],[4,2]]",
      [&](auto&) { return l26 == gram({{2, 4}, {4, 2}}); });
  add("ns-2-8", "NS lattice of family 2-8 is [[4,0],[0,-2]]",
      [&](auto&) { return l28 == gram({{4, 0}, {0, -2}}); });
  add("ns-3-1", "NS lattice of family 3-1 is [[0,2,2],[2,0,2],[2,2,0]]",
      [&](auto&) { return l31 == gram({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}); });
  add("tensors-symmetric", "all intersection tensors are fully symmetric", [](auto&) {
    for (auto f : {FamilyId::F2_6b, FamilyId::F2_8, FamilyId::F3_1, FamilyId::Verra4})
      if (!tensor_symmetric(base_variety(f))) return false;
    return true;
  });
  add("verra-cubic", "(aH1+bH2)^3 = 6ab(a+b) on the Verra threefold for |a|,|b| <= 20", [](auto& os) {
    for (long a = -20; a <= 20; ++a)
      for (long b = -20; b <= 20; ++b)
        if (!verra_cubic(a, b).matches()) {
          os << "mismatch at (" << a << "," << b << ")";
          return false;
        }
    return true;
  });

  add("disc-2-6", "A(L_{2-6}) = Z/2 + Z/6 with q(h1/2) = q(h2/2) = 1/2 and q((h1+h2)/2) = 1", [&](auto& os) {
    const auto a = discriminant_group(l26);
    os << "divisors " << a.divisors()[0] << "," << a.divisors()[1];
    return a.divisors() == i64({2, 6}) && q_is(a, element(a, {half, 0}), half) &&
           q_is(a, element(a, {0, half}), half) && q_is(a, element(a, {half, half}), 1);
  });
  add("disc-3-1", "A(L_{3-1}) = Z/2 + Z/2 + Z/4 of order 16", [&](auto&) {
    const auto a = discriminant_group(l31);
    return a.divisors() == i64({2, 2, 4}) && abs(l31.determinant()) == 16;
  });
  add("disc-2-8", "A(L_{2-8}) = Z/2 + Z/4 with q(e/2) = 3/2 and q(h/4) = 1/4", [&](auto&) {
    const auto a = discriminant_group(l28);
    return a.divisors() == i64({2, 4}) && q_is(a, element(a, {0, half}), Rational(3, 2)) &&
           q_is(a, element(a, {Rational(1, 4), 0}), Rational(1, 4));
  });

  add("no-minus-2-mod-4", "v^2/2 = -1 has no solution mod 4 in L_{2-6}",
      [&](auto&) { return congruence_obstruction(l26, -2, 4); });
  add("no-minus-2-box", "L_{2-6} has no vector of square -2 with coordinates in [-50,50]",
      [&](auto&) { return represent(l26, -2, 50).empty(); });

  add("class-count-8", "discriminant 8: one proper class and one lattice class", [](auto& os) {
    const auto c = class_count(8);
    os << "proper " << c.proper << ", lattice classes " << c.lattice_classes;
    return c.proper == 1 && c.lattice_classes == 1;
  });
  add("class-count-12", "discriminant 12: exactly two even indefinite lattices", [](auto& os) {
    const auto c = class_count(12);
    os << "proper " << c.proper << ", lattice classes " << c.lattice_classes;
    return c.lattice_classes == 2;
  });
  add("disc-12-genera", "[[2,2],[2,-4]] and [[-2,2],[2,4]] lie in different genera", [](auto&) {
    return !same_genus(gram({{2, 2}, {2, -4}}), gram({{-2, 2}, {2, 4}}));
  });
  add("disc-12-3-primary", "3-primary parts carry q = 4/3 and q = 2/3 respectively", [](auto& os) {
    const auto p1 = primary_part(discriminant_group(gram({{2, 2}, {2, -4}})), 3);
    const auto p2 = primary_part(discriminant_group(gram({{-2, 2}, {2, 4}})), 3);
    if (p1.order() != 3 || p2.order() != 3) return false;
    os << "q = " << to_string(p1.q_generator(0)) << " vs " << to_string(p2.q_generator(0));
    return p1.q_generator(0) == Rational(4, 3) && p2.q_generator(0) == Rational(2, 3);
  });

  add("genus-2-6", "L_{2-6} is unique in its genus",
      [&](auto&) { return genus_representatives_rank2(l26).size() == 1; });
  add("genus-2-8", "L_{2-8} is unique in its genus",
      [&](auto&) { return genus_representatives_rank2(l28).size() == 1; });
  add("orth-2-6", "O(A(L_{2-6})) has order 4, generated by -id and the swap of h1 and h2", [&](auto& os) {
    const auto a = discriminant_group(l26);
    const auto o = orthogonal_group(a);
    const auto swap = induced_automorphism(a, IntMatrix{{0, 1}, {1, 0}});
    os << "order " << o.size();
    return o.size() == 4 && swap != identity_automorphism(a) && swap != negation_automorphism(a) &&
           std::find(o.begin(), o.end(), swap) != o.end();
  });
  add("orth-2-8", "O(A(L_{2-8})) = {+id, -id}",
      [&](auto&) { return orthogonal_group(discriminant_group(l28)).size() == 2; });

  for (const auto& [id, lat] : {std::pair{"fm-2-6", &l26}, std::pair{"fm-2-8", &l28}}) {
    const IntegerLattice& l = *lat;
    add(id, std::string("no non-trivial Fourier-Mukai partners for ") + *l.name() +
                " (Hodge image +-id, search bound 5, saturated)",
        [&l](auto& os) {
          const auto r = fm_partner_count(FMCountProblem{l, {l}, {}, 5, kDefaultBudget});
          os << "count " << r.count;
          return r.count == 1 && r.summands.front().saturated;
        });
  }

  add("isotropic-3-1", "A(L_{3-1}) has exactly 3 isotropic subgroups of order 2, generated by h_i/2, and none of order 4",
      [&](auto& os) {
        const auto a = discriminant_group(l31);
        const auto two = isotropic_subgroups(a, 2);
        const auto four = isotropic_subgroups(a, 4);
        os << two.size() << " of order 2, " << four.size() << " of order 4";
        if (two.size() != 3 || !four.empty()) return false;
        for (std::size_t i = 0; i < 3; ++i) {
          RatVector v(3, Rational(0));
          v[i] = half;
          const auto x = a.element_of(v);
          bool found = false;
          for (const auto& h : two) found = found || h.generators.front() == x;
          if (!found) return false;
        }
        return true;
      });
  add("overlattice-3-1", "every order-2 isotropic overlattice of L_{3-1} has discriminant 16/|H|^2 = 4", [&](auto&) {
    const auto a = discriminant_group(l31);
    for (const auto& h : isotropic_subgroups(a, 2))
      if (abs(overlattice(l31, a, h.generators).determinant()) != 4) return false;
    return true;
  });

  add("square2-completion", "every primitive square-2 vector of L_{2-6} in [-10,10] completes to a basis with Gram [[2,4],[4,2]]",
      [&](auto& os) {
        std::size_t n = 0;
        for (const auto& h : represent(l26, 2, 10)) {
          if (gcd_of(h) != 1) continue;
          const auto hp = complete_square2_basis(l26, h);
          if (square(l26, hp) != 2 || inner(l26, h, hp) != 4 || abs(h[0] * hp[1] - h[1] * hp[0]) != 1) return false;
          ++n;
        }
        os << n << " vectors";
        return n > 0;
      });
  add("isotropic-completion", "every primitive isotropic vector of L_{3-1} in [-5,5] completes to a basis with the L_{3-1} Gram",
      [&](auto& os) {
        std::size_t n = 0;
        for (const auto& f : represent(l31, 0, 5)) {
          if (gcd_of(f) == 0 || gcd_of(f) != 1) continue;
          const auto [fp, fpp] = complete_isotropic_basis(l31, f);
          IntMatrix b(3, 3);
          for (std::size_t i = 0; i < 3; ++i) {
            b(i, 0) = f[i];
            b(i, 1) = fp[i];
            b(i, 2) = fpp[i];
          }
          if (b.transpose() * l31.gram() * b != l31.gram()) return false;
          ++n;
        }
        os << n << " vectors";
        return n > 0;
      });

  const ProductSpace p111{{1, 1, 1}};
  add("ext-o-o100", "Ext^*(O, O(1,0,0)) = C^2 in degree 0 on P1xP1xP1", [&](auto&) {
    const auto t = ext_table(p111, {0, 0, 0}, {1, 0, 0});
    return t.dims[0] == 2 && t.dims[1] == 0 && t.dims[2] == 0 && t.dims[3] == 0;
  });
  const std::vector<LineBundle> eight{{-1, -1, -1}, {0, -1, -1}, {-1, 0, -1}, {-1, -1, 0},
                                      {0, 0, 0},    {1, 0, 0},   {0, 1, 0},   {0, 0, 1}};
  add("collection-8", "the 8 line bundles O(-1,-1,-1), ..., O(0,0,1) form an exceptional collection on P1xP1xP1",
      [&](auto&) { return check_collection(p111, eight).pass; });
  add("collection-4", "O, O(1,0,0), O(0,1,0), O(0,0,1) form an exceptional collection", [&](auto&) {
    return check_collection(p111, {eight.begin() + 4, eight.end()}).pass;
  });
  for (std::size_t i = 0; i < 3; ++i) {
    LineBundle f(3, 0), g(3, 0);
    f[i] = -1;
    g[i] = 1;
    std::ostringstream name;
    name << "mutation-" << i + 1;
    add(name.str(), "R_O O(-e_i) = O(e_i)[-1] for i = " + std::to_string(i + 1),
        [&p111, f, g](auto&) { return mutation_check(p111, {0, 0, 0}, f, g, -1).pass(); });
  }
  add("mutation-perturbed", "the same mutation with shift 0 fails the K-theory probes",
      [&](auto&) { return !mutation_check(p111, {0, 0, 0}, {-1, 0, 0}, {1, 0, 0}, 0).k_level; });
  add("verra-collection", "O(-1,0), O, O(1,0), O(0,1), O(1,1), O(2,1) is an exceptional collection on P2xP2", [](auto&) {
    return check_collection(ProductSpace{{2, 2}}, {{-1, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}}).pass;
  });

  add("van-geemen", "x^2/2 + yz on (Z/2)^3 has exactly the nonzero isotropic vectors (0,1,0) and (0,0,1)", [](auto& os) {
    const auto a = van_geemen_form();
    std::vector<FQMElement> iso;
    for (const auto& x : a.elements())
      if (!a.is_zero(x) && a.q_numerator(x) == 0) iso.push_back(x);
    for (const auto& x : iso) os << "(" << x.coeffs[0] << "," << x.coeffs[1] << "," << x.coeffs[2] << ")";
    return iso == std::vector<FQMElement>{{{0, 0, 1}}, {{0, 1, 0}}};
  });

  std::vector<LedgerItem> out;
  for (auto& [id, claim, check] : items) {
    LedgerItem item{id, claim, false, ""};
    std::ostringstream os;
    try {
      item.pass = check(os);
      item.detail = os.str();
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace k3lat
