#include "k3lat/lattice.hpp"

#include <limits>

#include "k3lat/errors.hpp"
#include "k3lat/smith.hpp"

namespace k3lat {

IntegerLattice::IntegerLattice(IntMatrix gram, std::optional<std::string> name)
    : gram_(std::move(gram)), name_(std::move(name)) {
  if (gram_.rows() == 0) throw InvalidInput("Gram matrix is empty");
  if (!gram_.square()) throw InvalidInput("Gram matrix is not square");
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw InvalidInput("Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    if (gram_(i, i) % 2 != 0)
      throw InvalidInput("Gram matrix has odd diagonal entry at " + std::to_string(i) +
                         " (lattice is not even)");
  }
  det_ = k3lat::determinant(gram_);
  if (det_ == 0) throw InvalidInput("Gram matrix is degenerate (determinant 0)");
}

IntegerLattice IntegerLattice::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                         std::optional<std::string> name) {
  IntMatrix g(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != g.cols()) throw InvalidInput("Gram matrix rows have unequal length");
    for (std::size_t j = 0; j < rows[i].size(); ++j) g(i, j) = static_cast<long>(rows[i][j]);
  }
  return IntegerLattice(std::move(g), std::move(name));
}

Signature signature_of(const IntMatrix& symmetric) {
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  Signature sig;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        sym_swap(k, j);
      } else {
        // All remaining diagonal entries vanish: e_k + e_j has square 2 a(k,j).
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw InvalidInput("matrix is degenerate");
        a.add_row(k, j, Rational(1));
        a.add_col(k, j, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = -a(i, k) / pivot;
      a.add_row(i, k, f);
      a.add_col(i, k, f);
    }
  }
  return sig;
}

LatticeInvariants basic_invariants(const IntegerLattice& lattice) {
  LatticeInvariants inv;
  inv.determinant = lattice.determinant();
  inv.discriminant = abs(inv.determinant);
  inv.signature = signature_of(lattice.gram());
  inv.even = true;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) inv.even = false;
  return inv;
}

void require_dimension(const IntegerLattice& lattice, const LatticeVector& v) {
  if (v.size() != lattice.rank())
    throw InvalidInput("vector has length " + std::to_string(v.size()) + " but lattice rank is " +
                       std::to_string(lattice.rank()));
}

Integer inner(const IntegerLattice& lattice, const LatticeVector& v, const LatticeVector& w) {
  require_dimension(lattice, v);
  require_dimension(lattice, w);
  const auto& g = lattice.gram();
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * g(i, j) * w[j];
  }
  return s;
}

Integer square(const IntegerLattice& lattice, const LatticeVector& v) { return inner(lattice, v, v); }

Integer divisibility(const IntegerLattice& lattice, const LatticeVector& v) {
  require_dimension(lattice, v);
  bool zero = true;
  for (const auto& x : v) zero = zero && x == 0;
  if (zero) throw PreconditionFailed("divisibility of the zero vector is undefined");
  return gcd_of(lattice.gram() * v);
}

namespace {

// Odometer over [-bound, bound]^n in lexicographic order.
template <class Visit>
void for_each_in_box(std::size_t n, std::int64_t bound, Visit&& visit) {
  std::vector<std::int64_t> v(n, -bound);
  for (;;) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = -bound;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<LatticeVector> represent(const IntegerLattice& lattice, const Integer& n,
                                     std::int64_t bound) {
  if (bound < 1) throw PreconditionFailed("represent: bound must be >= 1");
  const std::size_t r = lattice.rank();
  const auto& g = lattice.gram();
  std::vector<LatticeVector> out;

  Integer gmax = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) if (abs(g(i, j)) > gmax) gmax = abs(g(i, j));
  const Integer worst = gmax * bound * bound * Integer(static_cast<long>(r * r));
  if (worst < Integer(std::numeric_limits<std::int64_t>::max() / 4) && fits_int64(n)) {
    std::vector<std::int64_t> g64(r * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) g64[i * r + j] = g(i, j).get_si();
    const std::int64_t target = n.get_si();
    for_each_in_box(r, bound, [&](const std::vector<std::int64_t>& v) {
      std::int64_t q = 0;
      for (std::size_t i = 0; i < r; ++i) {
        q += g64[i * r + i] * v[i] * v[i];
        for (std::size_t j = i + 1; j < r; ++j) q += 2 * g64[i * r + j] * v[i] * v[j];
      }
      if (q == target) out.push_back(to_integers(v));
    });
  } else {
    for_each_in_box(r, bound, [&](const std::vector<std::int64_t>& v) {
      LatticeVector x = to_integers(v);
      if (square(lattice, x) == n) out.push_back(std::move(x));
    });
  }
  return out;
}

bool congruence_obstruction(const IntegerLattice& lattice, const Integer& n, std::int64_t modulus) {
  if (modulus < 2) throw PreconditionFailed("congruence_obstruction: modulus must be >= 2");
  if (mod_floor(n, Integer(2)) != 0) return true;
  const std::size_t r = lattice.rank();
  double cells = 1;
  for (std::size_t i = 0; i < r; ++i) cells *= static_cast<double>(modulus);
  if (cells > 1e9) throw BudgetExceeded("congruence_obstruction: modulus^rank exceeds 1e9 residues");

  // Work with the integral form v^2 / 2.
  const Integer m(static_cast<long>(modulus));
  std::vector<__int128> g(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Integer c = i == j ? Integer(lattice.gram()(i, i) / 2) : lattice.gram()(i, j);
      g[i * r + j] = mod_floor(c, m).get_si();
    }
  const __int128 target = mod_floor(Integer(n / 2), m).get_si();

  std::vector<std::int64_t> v(r, 0);
  for (;;) {
    __int128 q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      q += g[i * r + i] * v[i] * v[i];
      for (std::size_t j = i + 1; j < r; ++j) q += g[i * r + j] * v[i] * v[j];
      q %= modulus;
    }
    if (q == target) return false;
    std::size_t i = r;
    bool done = true;
    while (i > 0) {
      --i;
      if (++v[i] < modulus) {
        done = false;
        break;
      }
      v[i] = 0;
    }
    if (done) return true;
  }
}

IntMatrix primitive_and_complete(const IntegerLattice& lattice, const LatticeVector& v) {
  require_dimension(lattice, v);
  if (gcd_of(v) == 0) throw PreconditionFailed("primitive_and_complete: zero vector");
  IntMatrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  return complete_to_unimodular(col);
}

IntegerLattice change_basis(const IntegerLattice& lattice, const IntMatrix& basis) {
  return IntegerLattice(basis.transpose() * lattice.gram() * basis, lattice.name());
}

IntegerLattice negated(const IntegerLattice& lattice) {
  IntMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  return IntegerLattice(std::move(g));
}

bool is_indefinite(const IntegerLattice& lattice) {
  auto s = signature_of(lattice.gram());
  return s.positive > 0 && s.negative > 0;
}

}  // namespace k3lat
