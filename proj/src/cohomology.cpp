#include "k3lat/cohomology.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

std::int64_t ProductSpace::dimension() const {
  std::int64_t d = 0;
  for (auto n : factors) d += n;
  return d;
}

Integer CohomologyTable::euler() const {
  Integer chi = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) chi += (i % 2 == 0 ? dims[i] : Integer(-dims[i]));
  return chi;
}

bool CohomologyTable::is_zero() const {
  for (const auto& d : dims)
    if (d != 0) return false;
  return true;
}

void validate_space(const ProductSpace& s) {
  if (s.factors.empty()) throw InvalidInput("product space needs at least one factor");
  for (auto n : s.factors)
    if (n < 1) throw InvalidInput("projective factor dimensions must be >= 1");
}

namespace {

void require_shape(const ProductSpace& s, const LineBundle& l) {
  if (l.size() != s.factors.size())
    throw InvalidInput("line bundle has " + std::to_string(l.size()) + " degrees, space has " +
                       std::to_string(s.factors.size()) + " factors");
}

}  // namespace

CohomologyTable bott_dims(std::int64_t n, std::int64_t d) {
  if (n < 1) throw InvalidInput("projective space dimension must be >= 1");
  CohomologyTable t;
  t.dims.assign(static_cast<std::size_t>(n + 1), Integer(0));
  if (d >= 0)
    t.dims[0] = binomial(Integer(static_cast<long>(n + d)), static_cast<unsigned long>(n));
  else if (d <= -n - 1)
    t.dims[static_cast<std::size_t>(n)] = binomial(Integer(static_cast<long>(-d - 1)), static_cast<unsigned long>(n));
  return t;
}

CohomologyTable cohomology(const ProductSpace& s, const LineBundle& l) {
  validate_space(s);
  require_shape(s, l);
  CohomologyTable acc{{Integer(1)}};
  for (std::size_t f = 0; f < s.factors.size(); ++f) {
    const CohomologyTable t = bott_dims(s.factors[f], l[f]);
    CohomologyTable next;
    next.dims.assign(acc.dims.size() + t.dims.size() - 1, Integer(0));
    for (std::size_t i = 0; i < acc.dims.size(); ++i)
      for (std::size_t j = 0; j < t.dims.size(); ++j) next.dims[i + j] += acc.dims[i] * t.dims[j];
    acc = std::move(next);
  }
  return acc;
}

CohomologyTable ext_table(const ProductSpace& s, const LineBundle& l1, const LineBundle& l2) {
  validate_space(s);
  require_shape(s, l1);
  require_shape(s, l2);
  LineBundle diff(l1.size());
  for (std::size_t i = 0; i < l1.size(); ++i) diff[i] = l2[i] - l1[i];
  return cohomology(s, diff);
}

Integer euler_characteristic(const ProductSpace& s, const LineBundle& l) {
  validate_space(s);
  require_shape(s, l);
  Integer chi = 1;
  for (std::size_t f = 0; f < s.factors.size(); ++f) {
    // C(n+d, n) as a polynomial in d: prod_{k=1..n} (d + k) / n!
    Integer num = 1, den = 1;
    for (std::int64_t k = 1; k <= s.factors[f]; ++k) {
      num *= Integer(static_cast<long>(l[f] + k));
      den *= Integer(static_cast<long>(k));
    }
    chi *= num / den;
  }
  return chi;
}

CollectionReport check_collection(const ProductSpace& s, const std::vector<LineBundle>& c) {
  validate_space(s);
  if (c.empty()) throw InvalidInput("collection is empty");
  CollectionReport r;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto t = ext_table(s, c[i], c[i]);
    CohomologyTable one;
    one.dims.assign(t.dims.size(), Integer(0));
    one.dims[0] = 1;
    if (!(t == one)) r.violations.push_back({i, i, "not-exceptional", t});
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto t = ext_table(s, c[j], c[i]);
      if (!t.is_zero()) r.violations.push_back({j, i, "nonzero-backward-ext", t});
    }
  r.pass = r.violations.empty();
  return r;
}

MutationReport mutation_check(const ProductSpace& s, const LineBundle& e, const LineBundle& f,
                              const LineBundle& g, std::int64_t shift, std::int64_t probe_radius) {
  validate_space(s);
  require_shape(s, e);
  require_shape(s, f);
  require_shape(s, g);
  if (probe_radius < 0) throw InvalidInput("probe radius must be >= 0");
  const auto ee = ext_table(s, e, e);
  if (ee.dims[0] != 1 || ee.euler() != 1) throw PreconditionFailed("E is not exceptional");

  MutationReport r;
  r.probe_radius = probe_radius;
  r.hom_f_e = ext_table(s, f, e);
  r.hom_g_e = ext_table(s, g, e);
  r.hom_level = r.hom_g_e.is_zero();

  const Integer chi_fe = r.hom_f_e.euler();
  const Integer sign = (shift % 2 == 0) ? 1 : -1;
  const std::size_t m = s.factors.size();
  LineBundle t(m, -probe_radius);
  r.k_level = true;
  for (;;) {
    LineBundle gt(m), ft(m), et(m);
    for (std::size_t i = 0; i < m; ++i) {
      gt[i] = g[i] + t[i];
      ft[i] = f[i] + t[i];
      et[i] = e[i] + t[i];
    }
    MutationProbe p{t, sign * cohomology(s, gt).euler(),
                    cohomology(s, ft).euler() - chi_fe * cohomology(s, et).euler()};
    r.k_level = r.k_level && p.pass();
    r.probes.push_back(std::move(p));
    std::size_t i = m;
    while (i > 0 && t[i - 1] == probe_radius) t[--i] = -probe_radius;
    if (i == 0) break;
    ++t[i - 1];
  }
  return r;
}

}  // namespace k3lat
