#pragma once

// Indefinite binary quadratic forms ax^2 + bxy + cy^2 and the bridge to
// rank-2 even lattices.

#include <compare>
#include <cstddef>
#include <vector>

#include "k3lat/lattice.hpp"
#include "k3lat/numeric.hpp"

namespace k3lat {

struct BinaryQuadraticForm {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }

  friend bool operator==(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend std::strong_ordering operator<=>(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y);
};

/// [[2a, b], [b, 2c]].
IntegerLattice to_lattice(const BinaryQuadraticForm& f);
/// Inverse of to_lattice; rank 2 only.
BinaryQuadraticForm to_form(const IntegerLattice& lattice);

/// Throws InvalidInput unless D > 0, D = 0,1 mod 4 and D is not a square.
void require_indefinite_discriminant(const Integer& d);

/// 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b, decided with integer arithmetic.
bool is_reduced(const BinaryQuadraticForm& f);

/// Every reduced form of discriminant D, sorted.
std::vector<BinaryQuadraticForm> enumerate_reduced(const Integer& d);

/// One step (a,b,c) -> (c, b', (b'^2 - D)/4c). Lands on a reduced form after
/// finitely many steps and permutes the reduced forms.
BinaryQuadraticForm rho(const BinaryQuadraticForm& f);

/// The cycle of reduced forms reached from f, starting from the first reduced
/// form on its orbit.
std::vector<BinaryQuadraticForm> reduction_cycle(const BinaryQuadraticForm& f);

struct ClassCount {
  std::size_t proper = 0;
  std::size_t improper = 0;
  std::size_t lattice_classes = 0;
  std::vector<std::vector<BinaryQuadraticForm>> cycles;       // one per proper class
  std::vector<std::vector<std::size_t>> improper_classes;     // indices into cycles
};

/// improper merges proper classes of f and (c,b,a); lattice_classes counts
/// isometry classes of the even lattices [[2a,b],[b,2c]] and equals improper.
ClassCount class_count(const Integer& d);

/// Index of f's proper class within class_count(D).cycles.
std::size_t proper_class_of(const ClassCount& count, const BinaryQuadraticForm& f);

}  // namespace k3lat
