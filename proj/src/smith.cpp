#include "k3lat/smith.hpp"

#include <optional>

#include "k3lat/errors.hpp"

namespace k3lat {
namespace {

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct SmithState {
  IntMatrix d, u, v, vi;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row(dst, src, k);
    u.add_row(dst, src, k);
  }
  void negate_row(std::size_t r) {
    d.add_row(r, r, Integer(-2));
    u.add_row(r, r, Integer(-2));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    vi.swap_rows(a, b);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col(dst, src, k);
    v.add_col(dst, src, k);
    vi.add_row(src, dst, -k);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s.d(i, j) == 0) continue;
          if (!best || abs(s.d(i, j)) < abs(s.d(best->first, best->second))) best = {i, j};
        }
      if (!best) {
        SmithForm out{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.vi)};
        return out;
      }
      s.swap_rows(t, best->first);
      s.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.d(i, t) == 0) continue;
        s.add_row(i, t, -tdiv(s.d(i, t), s.d(t, t)));
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.d(t, j) == 0) continue;
        s.add_col(j, t, -tdiv(s.d(t, j), s.d(t, t)));
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        s.add_row(t, *bad_row, Integer(1));
        continue;
      }
      break;
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }
  return SmithForm{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.vi)};
}

IntMatrix column_hermite_basis(const IntMatrix& generators) {
  const std::size_t n = generators.rows(), m = generators.cols();
  if (m < n) throw InvalidInput("generating set has fewer columns than rows");
  IntMatrix b = generators;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (b(i, j) == 0) continue;
      Integer x, y;
      Integer a0 = b(i, i), b0 = b(i, j);
      Integer g = ext_gcd(a0, b0, x, y);
      Integer ai = a0 / g, bi = b0 / g;
      for (std::size_t r = 0; r < n; ++r) {
        Integer ci = b(r, i), cj = b(r, j);
        b(r, i) = x * ci + y * cj;
        b(r, j) = -bi * ci + ai * cj;
      }
    }
    if (b(i, i) == 0) throw InvalidInput("generating set does not have full rank");
    if (b(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) b(r, i) = -b(r, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), b(i, j).get_mpz_t(), b(i, i).get_mpz_t());
      if (q != 0) b.add_col(j, i, -q);
    }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b(i, j);
  return out;
}

IntMatrix complete_to_unimodular(const IntMatrix& columns) {
  const std::size_t n = columns.rows(), k = columns.cols();
  if (k > n) throw InvalidInput("more vectors than the ambient rank");
  IntMatrix w = columns;
  IntMatrix uinv = IntMatrix::identity(n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (w(i, j) == 0) continue;
      Integer x, y;
      Integer a0 = w(j, j), b0 = w(i, j);
      Integer g = ext_gcd(a0, b0, x, y);
      Integer ap = a0 / g, bp = b0 / g;
      for (std::size_t c = 0; c < k; ++c) {
        Integer rj = w(j, c), ri = w(i, c);
        w(j, c) = x * rj + y * ri;
        w(i, c) = -bp * rj + ap * ri;
      }
      for (std::size_t r = 0; r < n; ++r) {
        Integer cj = uinv(r, j), ci = uinv(r, i);
        uinv(r, j) = ap * cj + bp * ci;
        uinv(r, i) = -y * cj + x * ci;
      }
    }
  }
  Integer index = 1;
  for (std::size_t j = 0; j < k; ++j) index *= w(j, j);
  index = abs(index);
  if (index != 1) throw NotPrimitive(to_string(index));

  IntMatrix block = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) block(i, j) = w(i, j);
  return uinv * block;
}

}  // namespace k3lat
