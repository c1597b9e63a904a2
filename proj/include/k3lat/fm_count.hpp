#pragma once

// Counting Fourier-Mukai partners of a K3 surface from lattice data:
// a sum of double-coset counts  O(N) \ O(A_N) / O_Hodge  over a genus.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/disc_group.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

using Permutation = std::vector<std::int32_t>;

/// Visits every M with entries in [-bound, bound] and M^T G_target M = G_source
/// (columns are images of the source basis). Stop early by returning false.
/// Throws BudgetExceeded if the candidate pool exceeds `max_candidates`.
void for_each_isometry(const IntegerLattice& source, const IntegerLattice& target, std::int64_t bound,
                       const std::function<bool(const IntMatrix&)>& visit,
                       std::int64_t max_candidates = 50'000'000);

std::optional<IntMatrix> find_isometry(const IntegerLattice& source, const IntegerLattice& target,
                                       std::int64_t bound);

struct IsometryImage {
  std::vector<FQMAutomorphism> group;  // closure of the found images, sorted
  std::size_t isometries_found = 0;
  std::size_t orthogonal_order = 0;    // |O(A_L)|
  bool saturated = false;              // group == O(A_L)
};

/// Image in O(A_L) of the isometries of L found in the box [-bound, bound].
IsometryImage isometry_image(const IntegerLattice& lattice, std::int64_t bound,
                             std::int64_t budget = kDefaultBudget);

/// Closure of a generating set of permutations (identity included).
std::vector<Permutation> close_group(const std::vector<Permutation>& generators, std::size_t degree,
                                     std::size_t budget = 1'000'000);

/// Number of orbits of H1 x H2 on G acting by g -> h1 g h2^{-1}.
std::size_t double_coset_count(const std::vector<Permutation>& g, const std::vector<Permutation>& h1,
                               const std::vector<Permutation>& h2);

struct HodgeImageSpec {
  enum class Mode { PlusMinusId, Explicit };
  Mode mode = Mode::PlusMinusId;
  /// Images of the generators of each A_N, in that A_N's own generator basis.
  std::vector<FQMAutomorphism> generators;
};

struct FMCountProblem {
  IntegerLattice ns;
  std::vector<IntegerLattice> genus_reps;
  HodgeImageSpec hodge;
  std::int64_t search_bound = 5;
  std::int64_t budget = kDefaultBudget;
};

struct FMSummand {
  std::size_t index = 0;
  std::size_t orthogonal_order = 0;
  std::size_t image_order = 0;
  std::size_t hodge_order = 0;
  std::size_t isometries_found = 0;
  bool saturated = false;
  std::size_t double_cosets = 0;
};

struct FMCountReport {
  std::size_t count = 0;
  std::size_t ns_index = 0;  // position of ns among the genus representatives
  std::vector<FMSummand> summands;
  std::vector<std::string> warnings;
};

/// Throws PreconditionFailed if a representative is not in the genus of ns,
/// if ns is not among them, or if a Hodge generator is invalid on some A_N.
FMCountReport fm_partner_count(const FMCountProblem& problem);

}  // namespace k3lat
