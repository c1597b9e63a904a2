#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "k3lat/lattice.hpp"
#include "oracles.hpp"

namespace testing {

inline k3lat::IntegerLattice lat(const oracle::Mat& rows) { return k3lat::IntegerLattice::from_rows(rows); }

inline oracle::Mat rows_of(const k3lat::IntegerLattice& l) {
  oracle::Mat m(l.rank(), std::vector<std::int64_t>(l.rank()));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) m[i][j] = l.gram()(i, j).get_si();
  return m;
}

inline k3lat::IntVector ivec(std::initializer_list<long> v) {
  k3lat::IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Random nondegenerate even Gram matrix with entries in [-bound, bound].
inline oracle::Mat random_even_gram(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> off(-bound, bound), diag(-bound / 2, bound / 2);
  for (;;) {
    oracle::Mat g(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      g[i][i] = 2 * diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) g[i][j] = g[j][i] = off(rng);
    }
    if (oracle::det(g) != 0) return g;
  }
}

// Random unimodular matrix as a product of elementary operations.
inline k3lat::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  auto m = k3lat::IntMatrix::identity(n);
  if (n < 2) {
    if (rng() % 2) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> k(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      m.swap_cols(i, (i + 1) % n);
      continue;
    }
    m.add_col(i, j, k3lat::Integer(k(rng)));
  }
  return m;
}

}  // namespace testing
