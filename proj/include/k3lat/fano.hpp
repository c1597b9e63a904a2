#pragma once

// Intersection data of the base varieties, Neron-Severi lattices of the
// branch K3 surfaces, the Verra cubic form, and basis completions in
// L_{2-6} and L_{3-1}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/disc_group.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

enum class FamilyId { F2_6b, F2_8, F3_1, Verra4 };

/// Accepts 2-6b, 2-6(b), 2-8, 3-1, verra4 (case-insensitive).
FamilyId parse_family(const std::string& id);
std::string family_name(FamilyId f);

/// Symmetric intersection tensor of arity `arity` (3 for threefolds, 4 for
/// P2xP2) in the basis `basis`.
struct BaseVariety {
  std::string id;
  std::vector<std::string> basis;
  std::size_t arity = 3;
  std::vector<std::int64_t> tensor;  // row-major, picard_rank^arity entries
  std::vector<std::int64_t> branch_class;
  std::vector<std::int64_t> canonical_class;

  std::size_t picard_rank() const { return basis.size(); }
  std::int64_t at(std::initializer_list<std::size_t> idx) const;
};

BaseVariety base_variety(FamilyId f);

bool tensor_symmetric(const BaseVariety& v);

/// Gram[i][j] = sum_k T[i][j][k] * branch[k]. Verra4 is rejected.
IntegerLattice ns_lattice_of_branch(FamilyId f);

struct VerraValue {
  Integer tensor_value;
  Integer closed_form;  // 6ab(a+b)
  bool matches() const { return tensor_value == closed_form; }
};

/// (aH1 + bH2)^3 on the (2,2) divisor of P2xP2, by tensor contraction.
VerraValue verra_cubic(const Integer& a, const Integer& b);

/// Vector h' with h'^2 = 2, h.h' = 4 and (h, h') a basis. `other_root` picks
/// the second root of the quadratic in k.
LatticeVector complete_square2_basis(const IntegerLattice& lattice, const LatticeVector& h,
                                     bool other_root = false);

/// (F', F'') such that (F, F', F'') has Gram [[0,2,2],[2,0,2],[2,2,0]].
std::pair<LatticeVector, LatticeVector> complete_isotropic_basis(const IntegerLattice& lattice,
                                                                 const LatticeVector& f);

/// q(x,y,z) = x^2/2 + yz on (Z/2)^3.
FiniteQuadraticModule van_geemen_form();

}  // namespace k3lat
