#include "k3lat/genus.hpp"

#include <algorithm>

#include "k3lat/binary_forms.hpp"
#include "k3lat/errors.hpp"

namespace k3lat {

bool same_genus(const IntegerLattice& l1, const IntegerLattice& l2, std::int64_t budget) {
  if (l1.rank() != l2.rank()) return false;
  if (abs(l1.determinant()) != abs(l2.determinant())) return false;
  if (!(signature_of(l1.gram()) == signature_of(l2.gram()))) return false;
  return qf_isometric(discriminant_group(l1), discriminant_group(l2), budget).has_value();
}

std::vector<IntegerLattice> genus_representatives_rank2(const IntegerLattice& lattice, std::int64_t budget) {
  if (lattice.rank() != 2)
    throw PreconditionFailed("genus representatives are only available in rank 2 (got rank " +
                             std::to_string(lattice.rank()) + ")");
  if (!is_indefinite(lattice)) throw PreconditionFailed("lattice is not indefinite");
  const BinaryQuadraticForm f = to_form(lattice);
  const Integer d = f.discriminant();
  if (is_square(d)) throw PreconditionFailed("discriminant " + d.get_str() + " is a perfect square");

  const ClassCount count = class_count(d);
  const std::size_t own_proper = proper_class_of(count, f);
  std::vector<IntegerLattice> out;
  for (const auto& cls : count.improper_classes) {
    if (std::find(cls.begin(), cls.end(), own_proper) != cls.end()) {
      out.push_back(lattice);
      continue;
    }
    IntegerLattice rep = to_lattice(count.cycles[cls.front()].front());
    if (same_genus(lattice, rep, budget)) out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace k3lat
