#pragma once

// Line-bundle cohomology on products of projective spaces (Bott + Kunneth),
// exceptional collections and right mutations through one exceptional object.

#include <cstdint>
#include <string>
#include <vector>

#include "k3lat/numeric.hpp"

namespace k3lat {

struct ProductSpace {
  std::vector<std::int64_t> factors;  // dimensions n_i >= 1
  std::int64_t dimension() const;
};

using LineBundle = std::vector<std::int64_t>;

/// dims[i] = h^i, length dim + 1.
struct CohomologyTable {
  std::vector<Integer> dims;
  Integer euler() const;
  bool is_zero() const;
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

void validate_space(const ProductSpace& s);

/// H^*(P^n, O(d)).
CohomologyTable bott_dims(std::int64_t n, std::int64_t d);

CohomologyTable cohomology(const ProductSpace& s, const LineBundle& l);

/// Ext^*(L1, L2) = H^*(L2 - L1).
CohomologyTable ext_table(const ProductSpace& s, const LineBundle& l1, const LineBundle& l2);

/// Product over factors of C(n_i + d_i, n_i), as a polynomial value.
Integer euler_characteristic(const ProductSpace& s, const LineBundle& l);

struct CollectionViolation {
  std::size_t first = 0;   // Ext^*(E_first, E_second)
  std::size_t second = 0;
  std::string kind;        // "not-exceptional" | "nonzero-backward-ext"
  CohomologyTable table;
};

struct CollectionReport {
  bool pass = true;
  std::vector<CollectionViolation> violations;
};

CollectionReport check_collection(const ProductSpace& s, const std::vector<LineBundle>& collection);

struct MutationProbe {
  LineBundle twist;
  Integer lhs;  // chi(G(t)) * (-1)^shift
  Integer rhs;  // chi(F(t)) - chi(F,E) chi(E(t))
  bool pass() const { return lhs == rhs; }
};

struct MutationReport {
  CohomologyTable hom_f_e;   // Hom^*(F, E)
  CohomologyTable hom_g_e;   // Hom^*(G, E); zero when G[shift] lies in E-perp
  bool hom_level = false;
  bool k_level = false;
  std::int64_t probe_radius = 3;
  std::vector<MutationProbe> probes;
  bool pass() const { return hom_level && k_level; }
};

/// Checks R_E F = G[shift], where R_E F -> F -> E (x) Hom^*(F,E)^dual.
/// Throws PreconditionFailed if E is not exceptional.
MutationReport mutation_check(const ProductSpace& s, const LineBundle& e, const LineBundle& f,
                              const LineBundle& g, std::int64_t shift, std::int64_t probe_radius = 3);

}  // namespace k3lat
