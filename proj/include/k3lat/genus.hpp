#pragma once

// Genus membership (signature plus discriminant-form isometry) and genus
// representatives for rank-2 indefinite even lattices.

#include <cstdint>
#include <vector>

#include "k3lat/disc_group.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

bool same_genus(const IntegerLattice& l1, const IntegerLattice& l2, std::int64_t budget = kDefaultBudget);

/// One lattice per isometry class in the genus of `lattice`. The class of the
/// input is represented by the input itself. Rank 2, indefinite only.
std::vector<IntegerLattice> genus_representatives_rank2(const IntegerLattice& lattice,
                                                        std::int64_t budget = kDefaultBudget);

}  // namespace k3lat
