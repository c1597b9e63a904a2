#pragma once

// Even integral lattices given by Gram matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/numeric.hpp"

namespace k3lat {

/// Coordinates in the lattice basis.
using LatticeVector = IntVector;

/// A non-degenerate even lattice. The constructor enforces every invariant,
/// so a constructed value is always valid.
class IntegerLattice {
 public:
  explicit IntegerLattice(IntMatrix gram, std::optional<std::string> name = std::nullopt);

  static IntegerLattice from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                  std::optional<std::string> name = std::nullopt);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& determinant() const { return det_; }
  const std::optional<std::string>& name() const { return name_; }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  Integer det_;
  std::optional<std::string> name_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct LatticeInvariants {
  Integer determinant;
  Integer discriminant;
  Signature signature;
  bool even = true;
};

LatticeInvariants basic_invariants(const IntegerLattice& lattice);

/// Signature of a nonsingular symmetric rational matrix by congruence diagonalization.
Signature signature_of(const IntMatrix& symmetric);

Integer inner(const IntegerLattice& lattice, const LatticeVector& v, const LatticeVector& w);
Integer square(const IntegerLattice& lattice, const LatticeVector& v);

/// gcd of v.e_i over the basis; v must be nonzero.
Integer divisibility(const IntegerLattice& lattice, const LatticeVector& v);

/// Every vector with v^2 == n and all coordinates in [-bound, bound], in
/// lexicographic order. Says nothing about vectors outside the box.
std::vector<LatticeVector> represent(const IntegerLattice& lattice, const Integer& n,
                                     std::int64_t bound);

/// True iff v^2/2 == n/2 (mod modulus) has no solution in (Z/modulus)^rank,
/// i.e. v^2 == n (mod 2*modulus) is insoluble. Always true for odd n.
bool congruence_obstruction(const IntegerLattice& lattice, const Integer& n,
                            std::int64_t modulus);

/// Unimodular matrix whose first column is v. Throws NotPrimitive naming the
/// content gcd if v is not primitive.
IntMatrix primitive_and_complete(const IntegerLattice& lattice, const LatticeVector& v);

/// Gram matrix of the lattice in the basis given by the columns of `basis`
/// (basis^T G basis). The result must still be a valid even lattice.
IntegerLattice change_basis(const IntegerLattice& lattice, const IntMatrix& basis);

/// Lattice with Gram matrix multiplied by -1.
IntegerLattice negated(const IntegerLattice& lattice);

bool is_indefinite(const IntegerLattice& lattice);

void require_dimension(const IntegerLattice& lattice, const LatticeVector& v);

}  // namespace k3lat
