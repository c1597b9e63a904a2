#pragma once

// Unimodular reductions over Z: Smith normal form with transforms, a canonical
// lattice basis from a generating set, and completion of primitive sets to bases.

#include "k3lat/numeric.hpp"

namespace k3lat {

/// left * input * right == diagonal, with left/right unimodular and
/// diagonal entries d_0 | d_1 | ... nonnegative. right_inverse is right^{-1}.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix right_inverse;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Canonical (lower-triangular Hermite) basis of the lattice spanned by the
/// columns of `generators`, which must have full row rank. Returns a square
/// matrix whose columns form the basis.
IntMatrix column_hermite_basis(const IntMatrix& generators);

/// Given an n x k matrix whose columns form a primitive set, returns a
/// unimodular n x n matrix whose first k columns are exactly those columns.
/// Throws NotPrimitive (carrying the index of the span in its saturation)
/// otherwise.
IntMatrix complete_to_unimodular(const IntMatrix& columns);

}  // namespace k3lat
