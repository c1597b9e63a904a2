#include "k3lat/fano.hpp"

#include <algorithm>
#include <cctype>

#include "k3lat/errors.hpp"
#include "k3lat/smith.hpp"

namespace k3lat {

FamilyId parse_family(const std::string& id) {
  std::string s;
  for (char c : id)
    if (c != '(' && c != ')' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "2-6b") return FamilyId::F2_6b;
  if (s == "2-8") return FamilyId::F2_8;
  if (s == "3-1") return FamilyId::F3_1;
  if (s == "verra4" || s == "verra") return FamilyId::Verra4;
  throw InvalidInput("unknown family '" + id + "' (expected 2-6b, 2-8, 3-1 or verra4)");
}

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::F2_6b: return "2-6b";
    case FamilyId::F2_8: return "2-8";
    case FamilyId::F3_1: return "3-1";
    case FamilyId::Verra4: return "verra4";
  }
  return "";
}

std::int64_t BaseVariety::at(std::initializer_list<std::size_t> idx) const {
  std::size_t flat = 0;
  for (auto i : idx) flat = flat * picard_rank() + i;
  return tensor.at(flat);
}

namespace {

// H1^a H2^b on P2 x P2 with a + b = 4.
std::int64_t p2xp2(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t ones = i + j + k + l;
  return ones == 2 ? 1 : 0;
}

BaseVariety p2xp2_variety() {
  BaseVariety v{"P2xP2", {"H1", "H2"}, 4, {}, {2, 2}, {-3, -3}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) v.tensor.push_back(p2xp2(i, j, k, l));
  return v;
}

}  // namespace

BaseVariety base_variety(FamilyId f) {
  switch (f) {
    case FamilyId::F2_6b: {
      // (1,1) divisor Y in P2xP2: T_ijk = H_i H_j H_k (H1 + H2).
      BaseVariety v{"P2xP2-(1,1)-divisor", {"H1", "H2"}, 3, {}, {2, 2}, {-2, -2}};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t k = 0; k < 2; ++k) v.tensor.push_back(p2xp2(i, j, k, 0) + p2xp2(i, j, k, 1));
      return v;
    }
    case FamilyId::F2_8: {
      BaseVariety v{"Blp-P3", {"H", "E"}, 3, {}, {4, -2}, {-4, 2}};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t k = 0; k < 2; ++k) v.tensor.push_back(i == j && j == k ? 1 : 0);
      return v;
    }
    case FamilyId::F3_1: {
      BaseVariety v{"P1xP1xP1", {"H1", "H2", "H3"}, 3, {}, {2, 2, 2}, {-2, -2, -2}};
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k) v.tensor.push_back(i != j && j != k && i != k ? 1 : 0);
      return v;
    }
    case FamilyId::Verra4:
      return p2xp2_variety();
  }
  throw InvalidInput("unknown family");
}

bool tensor_symmetric(const BaseVariety& v) {
  const std::size_t n = v.picard_rank();
  std::vector<std::size_t> idx(v.arity, 0);
  const std::size_t total = v.tensor.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t t = flat;
    for (std::size_t p = v.arity; p-- > 0;) {
      idx[p] = t % n;
      t /= n;
    }
    auto perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      std::size_t g = 0;
      for (auto i : perm) g = g * n + i;
      if (v.tensor[g] != v.tensor[flat]) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

IntegerLattice ns_lattice_of_branch(FamilyId f) {
  if (f == FamilyId::Verra4)
    throw PreconditionFailed("the Verra branch locus is a threefold; use verra-cubic instead");
  const BaseVariety v = base_variety(f);
  const std::size_t n = v.picard_rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += v.at({i, j, k}) * v.branch_class[k];
      g(i, j) = static_cast<long>(s);
    }
  const char* names[] = {"L_{2-6}", "L_{2-8}", "L_{3-1}"};
  return IntegerLattice(std::move(g), names[static_cast<int>(f)]);
}

VerraValue verra_cubic(const Integer& a, const Integer& b) {
  const BaseVariety v = p2xp2_variety();
  const Integer x[2] = {a, b};
  VerraValue out;
  out.tensor_value = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const std::int64_t t = v.at({i, j, k, l});
          if (t != 0) out.tensor_value += t * x[i] * x[j] * x[k] * v.branch_class[l];
        }
  out.closed_form = 6 * a * b * (a + b);
  return out;
}

LatticeVector complete_square2_basis(const IntegerLattice& lattice, const LatticeVector& h, bool other_root) {
  if (lattice.rank() != 2) throw PreconditionFailed("complete_square2_basis needs a rank-2 lattice");
  if (lattice.determinant() != -12)
    throw PreconditionFailed("lattice determinant is " + lattice.determinant().get_str() + ", expected -12");
  require_dimension(lattice, h);
  if (square(lattice, h) != 2) throw PreconditionFailed("h^2 = " + square(lattice, h).get_str() + ", expected 2");
  const IntMatrix basis = primitive_and_complete(lattice, h);
  const LatticeVector d = basis.column(1);
  const Integer dh = inner(lattice, d, h);
  const Integer k = (-dh + (other_root ? -4 : 4)) / 2;
  LatticeVector hp(2);
  for (std::size_t i = 0; i < 2; ++i) hp[i] = d[i] + k * h[i];
  if (inner(lattice, h, hp) < 0)
    for (auto& x : hp) x = -x;
  if (square(lattice, hp) != 2 || inner(lattice, h, hp) != 4)
    throw Error("basis completion failed its Gram check");
  return hp;
}

namespace {

// x with w . x = gcd(w).
IntVector bezout_vector(const IntVector& w) {
  IntVector x(w.size(), Integer(0));
  Integer g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer s, t;
    const Integer ng = ext_gcd(g, w[i], s, t);
    for (std::size_t j = 0; j < i; ++j) x[j] *= s;
    x[i] = t;
    g = ng;
  }
  return x;
}

}  // namespace

std::pair<LatticeVector, LatticeVector> complete_isotropic_basis(const IntegerLattice& lattice,
                                                                 const LatticeVector& f) {
  if (lattice.rank() != 3) throw PreconditionFailed("complete_isotropic_basis needs a rank-3 lattice");
  if (lattice.determinant() != 16)
    throw PreconditionFailed("lattice determinant is " + lattice.determinant().get_str() + ", expected 16");
  require_dimension(lattice, f);
  const Integer f2 = square(lattice, f);
  if (f2 != 0) throw PreconditionFailed("F is not isotropic (square " + f2.get_str() + ")");
  const Integer content = gcd_of(f);
  if (content != 1) throw NotPrimitive(content.get_str());
  const Integer div = divisibility(lattice, f);
  if (div != 2) throw PreconditionFailed("F has divisibility " + div.get_str() + ", expected 2");

  const auto& g = lattice.gram();
  const LatticeVector dp = bezout_vector(g * f);  // F . D' = 2
  const Integer dp2 = square(lattice, dp);
  if (dp2 % 4 != 0) throw PreconditionFailed("lattice is not isometric to L_{3-1}");
  const Integer n = dp2 / 4;
  LatticeVector fp(3);
  for (std::size_t i = 0; i < 3; ++i) fp[i] = dp[i] - n * f[i];

  IntMatrix cols(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    cols(i, 0) = f[i];
    cols(i, 1) = fp[i];
  }
  const LatticeVector dpp = complete_to_unimodular(cols).column(2);
  const Integer a = inner(lattice, f, dpp) / 2;
  const Integer b = inner(lattice, fp, dpp) / 2;
  LatticeVector fpp(3);
  for (std::size_t i = 0; i < 3; ++i) fpp[i] = (1 - b) * f[i] + (1 - a) * fp[i] + dpp[i];

  const LatticeVector basis[3] = {f, fp, fpp};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (inner(lattice, basis[i], basis[j]) != (i == j ? 0 : 2))
        throw PreconditionFailed("lattice is not isometric to L_{3-1}");
  return {fp, fpp};
}

FiniteQuadraticModule van_geemen_form() {
  const Rational half(1, 2);
  RatMatrix b(3, 3);
  b(0, 0) = half;
  b(1, 2) = half;
  b(2, 1) = half;
  return FiniteQuadraticModule::from_gram({2, 2, 2}, {half, Rational(0), Rational(0)}, b);
}

}  // namespace k3lat
