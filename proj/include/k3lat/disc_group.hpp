#pragma once

// Discriminant groups A_L = L*/L with their Q/2Z quadratic forms, plus the
// finite-group machinery built on them: isotropic subgroups, orthogonal
// groups, isometry tests and overlattices.

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "k3lat/lattice.hpp"
#include "k3lat/numeric.hpp"

namespace k3lat {

inline constexpr std::int64_t kDefaultBudget = 10000;

/// Coefficients c_i in Z/d_i with respect to the module's generators.
struct FQMElement {
  std::vector<std::int64_t> coeffs;
  friend auto operator<=>(const FQMElement&, const FQMElement&) = default;
};

/// A group automorphism, stored as the images of the generators.
struct FQMAutomorphism {
  std::vector<FQMElement> images;
  friend auto operator<=>(const FQMAutomorphism&, const FQMAutomorphism&) = default;
};

struct Subgroup {
  std::vector<FQMElement> generators;  // canonical: greedy over sorted elements
  std::vector<FQMElement> elements;    // sorted
  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

/// Finite abelian group  Z/d_1 + ... + Z/d_k  (d_i | d_{i+1}, d_i >= 2) with a
/// quadratic form q into Q/2Z and bilinear form b into Q/Z. Values are kept
/// as integer numerators over a common `level`.
class FiniteQuadraticModule {
 public:
  /// Abstract form from generator data. b must be symmetric with
  /// b_ii == q_i mod 1; every value must be well defined on Z/d_i.
  static FiniteQuadraticModule from_gram(std::vector<std::int64_t> divisors,
                                         const std::vector<Rational>& q_values,
                                         const RatMatrix& bilinear);

  const std::vector<std::int64_t>& divisors() const { return divisors_; }
  std::size_t num_generators() const { return divisors_.size(); }
  std::int64_t order() const;
  std::int64_t level() const { return level_; }
  bool trivial() const { return divisors_.empty(); }

  Rational q_generator(std::size_t i) const;
  Rational b_generator(std::size_t i, std::size_t j) const;

  bool from_lattice() const { return gram_.has_value(); }
  const std::optional<IntMatrix>& gram_ambient() const { return gram_; }
  /// Representatives in L (x) Q of the generators, coordinates in [0,1).
  const std::vector<RatVector>& generators() const { return generators_; }

  FQMElement zero() const;
  FQMElement generator(std::size_t i) const;
  bool valid(const FQMElement& x) const;
  FQMElement add(const FQMElement& x, const FQMElement& y) const;
  FQMElement negate(const FQMElement& x) const;
  FQMElement scale(const FQMElement& x, std::int64_t k) const;
  std::int64_t order_of(const FQMElement& x) const;
  bool is_zero(const FQMElement& x) const;

  /// q(x) in [0,2) and b(x,y) in [0,1).
  Rational q(const FQMElement& x) const;
  Rational b(const FQMElement& x, const FQMElement& y) const;
  /// Numerator of q(x) over level(), in [0, 2*level()).
  std::int64_t q_numerator(const FQMElement& x) const;
  std::int64_t b_numerator(const FQMElement& x, const FQMElement& y) const;

  /// Mixed-radix index; index order equals lexicographic coefficient order.
  std::int64_t index_of(const FQMElement& x) const;
  FQMElement element_at(std::int64_t index) const;
  std::vector<FQMElement> elements(std::int64_t budget = kDefaultBudget) const;

  /// Representative in L (x) Q of x, reduced to [0,1) per coordinate.
  RatVector ambient(const FQMElement& x) const;
  /// Class of a dual-lattice vector (ambient coordinates). Lattice-derived only.
  FQMElement element_of(const RatVector& x) const;

 private:
  friend FiniteQuadraticModule discriminant_group(const IntegerLattice&);
  friend FiniteQuadraticModule primary_part(const FiniteQuadraticModule&, std::int64_t);

  struct AmbientCoordinates {
    IntMatrix right_inverse;                // SNF V^{-1}
    std::vector<Integer> snf_diagonal;      // all n diagonal entries
    std::vector<std::size_t> positions;     // SNF index of each parent generator
    std::vector<std::int64_t> parent_divisors;
  };

  void set_values(const std::vector<Rational>& q_values, const RatMatrix& bilinear);

  std::vector<std::int64_t> divisors_;
  std::int64_t level_ = 1;
  std::vector<std::int64_t> q_num_;               // in [0, 2*level)
  std::vector<std::vector<std::int64_t>> b_num_;  // in [0, level)
  std::vector<RatVector> generators_;
  std::optional<IntMatrix> gram_;
  std::optional<AmbientCoordinates> coords_;
  std::vector<std::size_t> parent_index_;     // per generator
  std::vector<std::int64_t> parent_multiplier_;
};

FiniteQuadraticModule discriminant_group(const IntegerLattice& lattice);

/// (q(x) mod 2, b(x,y) mod 1).
std::pair<Rational, Rational> qf_values(const FiniteQuadraticModule& a, const FQMElement& x,
                                        const FQMElement& y);

Subgroup generated_subgroup(const FiniteQuadraticModule& a, const std::vector<FQMElement>& gens,
                            std::int64_t budget = kDefaultBudget);

bool is_isotropic(const FiniteQuadraticModule& a, const Subgroup& h);

/// All subgroups of exactly `order` elements on which q vanishes, sorted by
/// their element lists.
std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticModule& a, std::int64_t order,
                                          std::int64_t budget = kDefaultBudget);

FQMElement apply(const FiniteQuadraticModule& a, const FQMAutomorphism& f, const FQMElement& x);
/// (f o g)(x) = f(g(x)).
FQMAutomorphism compose(const FiniteQuadraticModule& a, const FQMAutomorphism& f,
                        const FQMAutomorphism& g);
FQMAutomorphism identity_automorphism(const FiniteQuadraticModule& a);
FQMAutomorphism negation_automorphism(const FiniteQuadraticModule& a);

/// Throws PreconditionFailed unless f is a q-preserving group automorphism.
void validate_automorphism(const FiniteQuadraticModule& a, const FQMAutomorphism& f);

/// Image of every element index under f.
std::vector<std::int32_t> as_permutation(const FiniteQuadraticModule& a, const FQMAutomorphism& f);

/// Every q-preserving automorphism, sorted. Exhaustive or BudgetExceeded.
std::vector<FQMAutomorphism> orthogonal_group(const FiniteQuadraticModule& a,
                                              std::int64_t budget = kDefaultBudget);

/// A q-preserving isomorphism from `source` onto `target` (images of the
/// source generators in the target), or nullopt after an exhaustive search.
std::optional<FQMAutomorphism> qf_isometric(const FiniteQuadraticModule& source,
                                            const FiniteQuadraticModule& target,
                                            std::int64_t budget = kDefaultBudget);

/// p-Sylow subgroup with the restricted form.
FiniteQuadraticModule primary_part(const FiniteQuadraticModule& a, std::int64_t p);

/// Automorphism of A_L induced by an integral isometry (columns = images of basis vectors).
FQMAutomorphism induced_automorphism(const FiniteQuadraticModule& a, const IntMatrix& isometry);

/// Even overlattice L + H for an isotropic H <= A_L, as a Gram matrix in the
/// canonical Hermite basis. `a` must be discriminant_group(lattice).
IntegerLattice overlattice(const IntegerLattice& lattice, const FiniteQuadraticModule& a,
                           const std::vector<FQMElement>& h_generators);
IntegerLattice overlattice(const IntegerLattice& lattice, const std::vector<FQMElement>& h_generators);

/// Basis (columns, rational ambient coordinates) of the overlattice.
RatMatrix overlattice_basis(const IntegerLattice& lattice, const FiniteQuadraticModule& a,
                            const std::vector<FQMElement>& h_generators);

bool is_prime(std::int64_t p);

}  // namespace k3lat
