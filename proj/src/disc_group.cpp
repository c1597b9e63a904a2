#include "k3lat/disc_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "k3lat/errors.hpp"
#include "k3lat/smith.hpp"

namespace k3lat {
namespace {

constexpr std::int64_t kMaxLevel = std::int64_t{1} << 31;

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > kMaxLevel) throw BudgetExceeded("finite quadratic form denominators exceed 2^31");
  return static_cast<std::int64_t>(l);
}

std::string format_element(const FQMElement& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) os << (i ? "," : "") << x.coeffs[i];
  os << ')';
  return os.str();
}

RatVector reduce_mod_one(RatVector v) {
  for (auto& x : v) x = mod_rational(x, Integer(1));
  return v;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FiniteQuadraticModule

void FiniteQuadraticModule::set_values(const std::vector<Rational>& q_values,
                                       const RatMatrix& bilinear) {
  const std::size_t k = divisors_.size();
  std::vector<Rational> q(k);
  RatMatrix b(k, k);
  std::int64_t level = 1;
  for (std::size_t i = 0; i < k; ++i) {
    q[i] = mod_rational(q_values[i], Integer(2));
    level = checked_lcm(level, to_int64(q[i].get_den()));
    for (std::size_t j = 0; j < k; ++j) {
      b(i, j) = mod_rational(bilinear(i, j), Integer(1));
      level = checked_lcm(level, to_int64(b(i, j).get_den()));
    }
  }
  level_ = level;
  q_num_.assign(k, 0);
  b_num_.assign(k, std::vector<std::int64_t>(k, 0));
  const Integer lv(static_cast<long>(level));
  for (std::size_t i = 0; i < k; ++i) {
    Rational t = q[i] * lv;
    q_num_[i] = to_int64(t.get_num());
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = b(i, j) * lv;
      b_num_[i][j] = to_int64(s.get_num());
    }
  }
}

FiniteQuadraticModule FiniteQuadraticModule::from_gram(std::vector<std::int64_t> divisors,
                                                       const std::vector<Rational>& q_values,
                                                       const RatMatrix& bilinear) {
  const std::size_t k = divisors.size();
  if (q_values.size() != k || bilinear.rows() != k || bilinear.cols() != k)
    throw InvalidInput("finite quadratic form: table sizes do not match the number of generators");
  for (std::size_t i = 0; i < k; ++i) {
    if (divisors[i] < 2) throw InvalidInput("finite quadratic form: elementary divisors must be >= 2");
    if (i + 1 < k && divisors[i + 1] % divisors[i] != 0)
      throw InvalidInput("finite quadratic form: elementary divisors must form a divisibility chain");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d(static_cast<long>(divisors[i]));
    if (mod_rational(bilinear(i, i) - q_values[i], Integer(1)) != 0)
      throw InvalidInput("finite quadratic form: b(x,x) must equal q(x) mod 1");
    if (mod_rational(q_values[i] * d * d, Integer(2)) != 0)
      throw InvalidInput("finite quadratic form: q is not well defined on Z/" + d.get_str());
    for (std::size_t j = 0; j < k; ++j) {
      if (mod_rational(bilinear(i, j) - bilinear(j, i), Integer(1)) != 0)
        throw InvalidInput("finite quadratic form: bilinear table is not symmetric");
      if (mod_rational(bilinear(i, j) * d, Integer(1)) != 0)
        throw InvalidInput("finite quadratic form: b is not well defined on Z/" + d.get_str());
    }
  }
  FiniteQuadraticModule a;
  a.divisors_ = std::move(divisors);
  a.set_values(q_values, bilinear);
  a.parent_index_.resize(k);
  std::iota(a.parent_index_.begin(), a.parent_index_.end(), std::size_t{0});
  a.parent_multiplier_.assign(k, 1);
  return a;
}

std::int64_t FiniteQuadraticModule::order() const {
  __int128 n = 1;
  for (auto d : divisors_) {
    n *= d;
    if (n > (static_cast<__int128>(1) << 62)) throw BudgetExceeded("discriminant group order overflows");
  }
  return static_cast<std::int64_t>(n);
}

Rational FiniteQuadraticModule::q_generator(std::size_t i) const {
  Rational r(q_num_.at(i), level_);
  r.canonicalize();
  return r;
}

Rational FiniteQuadraticModule::b_generator(std::size_t i, std::size_t j) const {
  Rational r(b_num_.at(i).at(j), level_);
  r.canonicalize();
  return r;
}

FQMElement FiniteQuadraticModule::zero() const { return FQMElement{std::vector<std::int64_t>(divisors_.size(), 0)}; }

FQMElement FiniteQuadraticModule::generator(std::size_t i) const {
  FQMElement e = zero();
  e.coeffs.at(i) = 1;
  return e;
}

bool FiniteQuadraticModule::valid(const FQMElement& x) const {
  if (x.coeffs.size() != divisors_.size()) return false;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (x.coeffs[i] < 0 || x.coeffs[i] >= divisors_[i]) return false;
  return true;
}

FQMElement FiniteQuadraticModule::add(const FQMElement& x, const FQMElement& y) const {
  FQMElement r = zero();
  for (std::size_t i = 0; i < divisors_.size(); ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % divisors_[i];
  return r;
}

FQMElement FiniteQuadraticModule::negate(const FQMElement& x) const {
  FQMElement r = zero();
  for (std::size_t i = 0; i < divisors_.size(); ++i) r.coeffs[i] = (divisors_[i] - x.coeffs[i]) % divisors_[i];
  return r;
}

FQMElement FiniteQuadraticModule::scale(const FQMElement& x, std::int64_t k) const {
  FQMElement r = zero();
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    const __int128 t = static_cast<__int128>(x.coeffs[i]) * k;
    r.coeffs[i] = mod_floor(static_cast<std::int64_t>(t % divisors_[i]), divisors_[i]);
  }
  return r;
}

bool FiniteQuadraticModule::is_zero(const FQMElement& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t FiniteQuadraticModule::order_of(const FQMElement& x) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    o = std::lcm(o, divisors_[i] / std::gcd(divisors_[i], x.coeffs[i]));
  return o;
}

std::int64_t FiniteQuadraticModule::q_numerator(const FQMElement& x) const {
  const std::int64_t m = 2 * level_;
  __int128 acc = 0;
  const std::size_t k = divisors_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs[i] == 0) continue;
    const __int128 c = x.coeffs[i];
    acc = (acc + c * c % m * q_num_[i]) % m;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (x.coeffs[j] == 0) continue;
      acc = (acc + 2 * (c * x.coeffs[j] % m) * b_num_[i][j]) % m;
    }
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t FiniteQuadraticModule::b_numerator(const FQMElement& x, const FQMElement& y) const {
  __int128 acc = 0;
  const std::size_t k = divisors_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y.coeffs[j] == 0) continue;
      acc = (acc + static_cast<__int128>(x.coeffs[i]) * y.coeffs[j] % level_ * b_num_[i][j]) % level_;
    }
  }
  return static_cast<std::int64_t>(acc);
}

Rational FiniteQuadraticModule::q(const FQMElement& x) const {
  Rational r(q_numerator(x), level_);
  r.canonicalize();
  return r;
}

Rational FiniteQuadraticModule::b(const FQMElement& x, const FQMElement& y) const {
  Rational r(b_numerator(x, y), level_);
  r.canonicalize();
  return r;
}

std::int64_t FiniteQuadraticModule::index_of(const FQMElement& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < divisors_.size(); ++i) idx = idx * divisors_[i] + x.coeffs[i];
  return idx;
}

FQMElement FiniteQuadraticModule::element_at(std::int64_t index) const {
  FQMElement e = zero();
  for (std::size_t i = divisors_.size(); i-- > 0;) {
    e.coeffs[i] = index % divisors_[i];
    index /= divisors_[i];
  }
  return e;
}

std::vector<FQMElement> FiniteQuadraticModule::elements(std::int64_t budget) const {
  const std::int64_t n = order();
  if (n > budget)
    throw BudgetExceeded("group of order " + std::to_string(n) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  std::vector<FQMElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

RatVector FiniteQuadraticModule::ambient(const FQMElement& x) const {
  if (!from_lattice()) throw PreconditionFailed("abstract finite quadratic form has no ambient lattice");
  RatVector v(gram_->rows(), Rational(0));
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    for (std::size_t r = 0; r < v.size(); ++r) v[r] += x.coeffs[i] * generators_[i][r];
  return reduce_mod_one(std::move(v));
}

FQMElement FiniteQuadraticModule::element_of(const RatVector& x) const {
  if (!from_lattice() || !coords_) throw PreconditionFailed("abstract finite quadratic form has no ambient lattice");
  const std::size_t n = gram_->rows();
  if (x.size() != n) throw InvalidInput("vector length does not match the lattice rank");
  const auto& c = *coords_;
  // y = V^{-1} x ; x is in L* iff D y is integral.
  RatVector y(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += c.right_inverse(i, j) * x[j];
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = y[i] * c.snf_diagonal[i];
    t.canonicalize();
    if (t.get_den() != 1) throw InvalidInput("vector is not in the dual lattice");
  }
  std::vector<std::int64_t> parent(c.positions.size());
  for (std::size_t k = 0; k < c.positions.size(); ++k) {
    Rational t = y[c.positions[k]] * c.parent_divisors[k];
    parent[k] = to_int64(mod_floor(t.get_num(), Integer(static_cast<long>(c.parent_divisors[k]))));
  }
  FQMElement e = zero();
  std::vector<bool> used(parent.size(), false);
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    const std::size_t k = parent_index_[i];
    const std::int64_t m = parent_multiplier_[i];
    used[k] = true;
    if (parent[k] % m != 0) throw InvalidInput("vector class lies outside this subgroup");
    e.coeffs[i] = (parent[k] / m) % divisors_[i];
  }
  for (std::size_t k = 0; k < parent.size(); ++k)
    if (!used[k] && parent[k] != 0) throw InvalidInput("vector class lies outside this subgroup");
  return e;
}

FiniteQuadraticModule discriminant_group(const IntegerLattice& lattice) {
  const auto& g = lattice.gram();
  const std::size_t n = lattice.rank();
  SmithForm snf = smith_normal_form(g);

  FiniteQuadraticModule a;
  a.gram_ = g;
  FiniteQuadraticModule::AmbientCoordinates coords;
  coords.right_inverse = snf.right_inverse;
  for (std::size_t i = 0; i < n; ++i) coords.snf_diagonal.push_back(snf.diagonal(i, i));

  const RatMatrix gq = to_rational(g);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.diagonal(i, i);
    if (d == 1) continue;
    RatVector gen(n);
    for (std::size_t r = 0; r < n; ++r) gen[r] = Rational(snf.right(r, i), d);
    for (auto& x : gen) x.canonicalize();
    a.generators_.push_back(reduce_mod_one(std::move(gen)));
    a.divisors_.push_back(to_int64(d));
    coords.positions.push_back(i);
    coords.parent_divisors.push_back(to_int64(d));
  }
  const std::size_t k = a.divisors_.size();
  std::vector<Rational> q(k);
  RatMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const RatVector gi = gq * a.generators_[i];
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < n; ++r) s += a.generators_[j][r] * gi[r];
      b(i, j) = s;
    }
    q[i] = b(i, i);
  }
  a.set_values(q, b);
  a.coords_ = std::move(coords);
  a.parent_index_.resize(k);
  std::iota(a.parent_index_.begin(), a.parent_index_.end(), std::size_t{0});
  a.parent_multiplier_.assign(k, 1);
  return a;
}

std::pair<Rational, Rational> qf_values(const FiniteQuadraticModule& a, const FQMElement& x,
                                        const FQMElement& y) {
  if (!a.valid(x) || !a.valid(y)) throw InvalidInput("element is not valid in this group");
  return {a.q(x), a.b(x, y)};
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Closure of `base` (a subgroup, given by indices) with one more element.
std::vector<std::int64_t> extend_subgroup(const FiniteQuadraticModule& a,
                                          const std::vector<std::int64_t>& base,
                                          const FQMElement& x) {
  std::set<std::int64_t> out(base.begin(), base.end());
  const std::int64_t ox = a.order_of(x);
  FQMElement kx = a.zero();
  for (std::int64_t k = 0; k < ox; ++k) {
    for (auto s : base) out.insert(a.index_of(a.add(a.element_at(s), kx)));
    kx = a.add(kx, x);
  }
  return {out.begin(), out.end()};
}

std::vector<FQMElement> canonical_generators(const FiniteQuadraticModule& a,
                                             const std::vector<std::int64_t>& sorted_members) {
  std::vector<FQMElement> gens;
  std::vector<std::int64_t> span{a.index_of(a.zero())};
  std::unordered_set<std::int64_t> in_span(span.begin(), span.end());
  for (auto idx : sorted_members) {
    if (in_span.count(idx)) continue;
    FQMElement x = a.element_at(idx);
    gens.push_back(x);
    span = extend_subgroup(a, span, x);
    in_span = std::unordered_set<std::int64_t>(span.begin(), span.end());
  }
  return gens;
}

Subgroup make_subgroup(const FiniteQuadraticModule& a, const std::vector<std::int64_t>& members) {
  Subgroup h;
  h.generators = canonical_generators(a, members);
  for (auto idx : members) h.elements.push_back(a.element_at(idx));
  return h;
}

}  // namespace

Subgroup generated_subgroup(const FiniteQuadraticModule& a, const std::vector<FQMElement>& gens,
                            std::int64_t budget) {
  if (a.order() > budget)
    throw BudgetExceeded("group of order " + std::to_string(a.order()) + " exceeds the enumeration budget");
  std::vector<std::int64_t> members{a.index_of(a.zero())};
  for (const auto& g : gens) {
    if (!a.valid(g)) throw InvalidInput("subgroup generator " + format_element(g) + " is not a valid element");
    members = extend_subgroup(a, members, g);
  }
  return make_subgroup(a, members);
}

bool is_isotropic(const FiniteQuadraticModule& a, const Subgroup& h) {
  return std::all_of(h.elements.begin(), h.elements.end(),
                     [&](const FQMElement& x) { return a.q_numerator(x) == 0; });
}

std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticModule& a, std::int64_t order,
                                          std::int64_t budget) {
  const std::int64_t n = a.order();
  if (order < 1 || n % order != 0)
    throw PreconditionFailed("isotropic_subgroups: order " + std::to_string(order) +
                             " does not divide the group order " + std::to_string(n));
  if (n > budget) throw BudgetExceeded("group of order " + std::to_string(n) + " exceeds the enumeration budget");

  std::vector<std::int64_t> isotropic;
  for (std::int64_t i = 1; i < n; ++i)
    if (a.q_numerator(a.element_at(i)) == 0) isotropic.push_back(i);

  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> frontier{{0}};
  seen.insert(frontier.front());
  std::vector<std::vector<std::int64_t>> hits;
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& s : frontier) {
      const auto size = static_cast<std::int64_t>(s.size());
      if (size == order) {
        hits.push_back(s);
        continue;
      }
      for (auto xi : isotropic) {
        if (std::binary_search(s.begin(), s.end(), xi)) continue;
        const FQMElement x = a.element_at(xi);
        bool orthogonal = true;
        for (auto si : s)
          if (a.b_numerator(a.element_at(si), x) != 0) {
            orthogonal = false;
            break;
          }
        if (!orthogonal) continue;
        auto t = extend_subgroup(a, s, x);
        if (order % static_cast<std::int64_t>(t.size()) != 0) continue;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<Subgroup> out;
  for (const auto& s : hits) out.push_back(make_subgroup(a, s));
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

FQMElement apply(const FiniteQuadraticModule& a, const FQMAutomorphism& f, const FQMElement& x) {
  FQMElement r = a.zero();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (x.coeffs[i] != 0) r = a.add(r, a.scale(f.images[i], x.coeffs[i]));
  return r;
}

FQMAutomorphism compose(const FiniteQuadraticModule& a, const FQMAutomorphism& f,
                        const FQMAutomorphism& g) {
  FQMAutomorphism h;
  for (const auto& img : g.images) h.images.push_back(apply(a, f, img));
  return h;
}

FQMAutomorphism identity_automorphism(const FiniteQuadraticModule& a) {
  FQMAutomorphism f;
  for (std::size_t i = 0; i < a.num_generators(); ++i) f.images.push_back(a.generator(i));
  return f;
}

FQMAutomorphism negation_automorphism(const FiniteQuadraticModule& a) {
  FQMAutomorphism f;
  for (std::size_t i = 0; i < a.num_generators(); ++i) f.images.push_back(a.negate(a.generator(i)));
  return f;
}

std::vector<std::int32_t> as_permutation(const FiniteQuadraticModule& a, const FQMAutomorphism& f) {
  const std::int64_t n = a.order();
  std::vector<std::int32_t> perm(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    perm[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(a.index_of(apply(a, f, a.element_at(i))));
  return perm;
}

namespace {

bool is_injective(const FiniteQuadraticModule& a, const std::vector<FQMElement>& images,
                  const FiniteQuadraticModule& target) {
  const std::int64_t n = a.order();
  std::vector<char> hit(static_cast<std::size_t>(target.order()), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const FQMElement x = a.element_at(i);
    FQMElement y = target.zero();
    for (std::size_t g = 0; g < x.coeffs.size(); ++g)
      if (x.coeffs[g] != 0) y = target.add(y, target.scale(images[g], x.coeffs[g]));
    auto& h = hit[static_cast<std::size_t>(target.index_of(y))];
    if (h) return false;
    h = 1;
  }
  return true;
}

// Depth-first search for q-preserving isomorphisms source -> target.
// Candidates for each generator image are pruned by (order, q) fingerprints.
std::vector<FQMAutomorphism> search_isometries(const FiniteQuadraticModule& src,
                                               const FiniteQuadraticModule& tgt, std::int64_t budget,
                                               bool first_only) {
  std::vector<FQMAutomorphism> found;
  if (src.divisors() != tgt.divisors()) return found;
  const std::int64_t n = src.order();
  if (n > budget)
    throw BudgetExceeded("group of order " + std::to_string(n) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  const std::size_t k = src.num_generators();
  if (k == 0) {
    found.push_back(FQMAutomorphism{});
    return found;
  }
  const std::int64_t level = checked_lcm(src.level(), tgt.level());
  const std::int64_t s_scale = level / src.level();
  const std::int64_t t_scale = level / tgt.level();

  std::vector<std::vector<FQMElement>> candidates(k);
  for (std::int64_t i = 0; i < n; ++i) {
    const FQMElement y = tgt.element_at(i);
    const std::int64_t oy = tgt.order_of(y);
    const std::int64_t qy = tgt.q_numerator(y) * t_scale;
    for (std::size_t g = 0; g < k; ++g)
      if (oy == src.divisors()[g] && qy == src.q_numerator(src.generator(g)) * s_scale)
        candidates[g].push_back(y);
  }

  std::vector<FQMElement> chosen(k);
  std::function<bool(std::size_t)> dfs = [&](std::size_t g) -> bool {
    if (g == k) {
      if (!is_injective(src, chosen, tgt)) return false;
      found.push_back(FQMAutomorphism{chosen});
      if (static_cast<std::int64_t>(found.size()) > budget)
        throw BudgetExceeded("more than " + std::to_string(budget) + " isometries; raise the budget");
      return first_only;
    }
    for (const auto& y : candidates[g]) {
      bool ok = true;
      for (std::size_t h = 0; h < g && ok; ++h)
        ok = tgt.b_numerator(y, chosen[h]) * t_scale ==
             src.b_numerator(src.generator(g), src.generator(h)) * s_scale;
      if (!ok) continue;
      chosen[g] = y;
      if (dfs(g + 1)) return true;
    }
    return false;
  };
  dfs(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

void validate_automorphism(const FiniteQuadraticModule& a, const FQMAutomorphism& f) {
  const std::size_t k = a.num_generators();
  if (f.images.size() != k)
    throw PreconditionFailed("automorphism lists " + std::to_string(f.images.size()) +
                             " generator images, group has " + std::to_string(k) + " generators");
  for (std::size_t i = 0; i < k; ++i) {
    if (!a.valid(f.images[i]))
      throw PreconditionFailed("automorphism image " + format_element(f.images[i]) + " is not a valid element");
    if (a.divisors()[i] % a.order_of(f.images[i]) != 0)
      throw PreconditionFailed("automorphism is not a well-defined homomorphism");
    if (a.q_numerator(f.images[i]) != a.q_numerator(a.generator(i)))
      throw PreconditionFailed("automorphism does not preserve q on generator " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (a.b_numerator(f.images[i], f.images[j]) != a.b_numerator(a.generator(i), a.generator(j)))
        throw PreconditionFailed("automorphism does not preserve b");
  }
  if (!is_injective(a, f.images, a)) throw PreconditionFailed("map is not bijective");
}

std::vector<FQMAutomorphism> orthogonal_group(const FiniteQuadraticModule& a, std::int64_t budget) {
  return search_isometries(a, a, budget, false);
}

std::optional<FQMAutomorphism> qf_isometric(const FiniteQuadraticModule& source,
                                            const FiniteQuadraticModule& target, std::int64_t budget) {
  if (target.order() > budget)
    throw BudgetExceeded("group of order " + std::to_string(target.order()) + " exceeds the enumeration budget");
  auto found = search_isometries(source, target, budget, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

FiniteQuadraticModule primary_part(const FiniteQuadraticModule& a, std::int64_t p) {
  if (!is_prime(p)) throw PreconditionFailed("primary_part: " + std::to_string(p) + " is not prime");
  FiniteQuadraticModule out;
  out.gram_ = a.gram_;
  out.coords_ = a.coords_;
  std::vector<std::int64_t> mult;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.num_generators(); ++i) {
    std::int64_t d = a.divisors_[i], pp = 1;
    while (d % p == 0) {
      d /= p;
      pp *= p;
    }
    if (pp == 1) continue;
    kept.push_back(i);
    mult.push_back(d);
    out.divisors_.push_back(pp);
    out.parent_index_.push_back(a.parent_index_[i]);
    out.parent_multiplier_.push_back(a.parent_multiplier_[i] * d);
    if (a.from_lattice()) {
      RatVector v = a.generators_[i];
      for (auto& x : v) x *= d;
      out.generators_.push_back(reduce_mod_one(std::move(v)));
    }
  }
  const std::size_t k = kept.size();
  std::vector<Rational> q(k);
  RatMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    q[i] = a.q_generator(kept[i]) * mult[i] * mult[i];
    for (std::size_t j = 0; j < k; ++j) b(i, j) = a.b_generator(kept[i], kept[j]) * mult[i] * mult[j];
  }
  out.set_values(q, b);
  return out;
}

FQMAutomorphism induced_automorphism(const FiniteQuadraticModule& a, const IntMatrix& isometry) {
  if (!a.from_lattice()) throw PreconditionFailed("induced_automorphism needs a lattice-derived group");
  const IntMatrix& g = *a.gram_ambient();
  if (isometry.rows() != g.rows() || isometry.cols() != g.cols())
    throw InvalidInput("isometry has the wrong shape");
  if (isometry.transpose() * g * isometry != g) throw PreconditionFailed("matrix is not an isometry of the lattice");
  const RatMatrix m = to_rational(isometry);
  FQMAutomorphism f;
  for (const auto& gen : a.generators()) f.images.push_back(a.element_of(m * gen));
  return f;
}

// ---------------------------------------------------------------------------
// Overlattices

RatMatrix overlattice_basis(const IntegerLattice& lattice, const FiniteQuadraticModule& a,
                            const std::vector<FQMElement>& h_generators) {
  if (!a.from_lattice() || *a.gram_ambient() != lattice.gram())
    throw PreconditionFailed("overlattice: discriminant group does not belong to this lattice");
  const Subgroup h = generated_subgroup(a, h_generators, std::max(a.order(), kDefaultBudget));
  for (const auto& x : h.elements)
    if (a.q_numerator(x) != 0) throw NotIsotropic(format_element(x), to_string(a.q(x)));

  const std::size_t n = lattice.rank();
  std::vector<RatVector> extra;
  Integer den = 1;
  for (const auto& x : h.generators) {
    extra.push_back(a.ambient(x));
    for (const auto& c : extra.back()) den = lcm(den, c.get_den());
  }
  IntMatrix gens(n, n + extra.size());
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
  for (std::size_t j = 0; j < extra.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Rational t = extra[j][i] * den;
      gens(i, n + j) = t.get_num();
    }
  const IntMatrix basis = column_hermite_basis(gens);
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(basis(i, j), den);
      out(i, j).canonicalize();
    }
  return out;
}

IntegerLattice overlattice(const IntegerLattice& lattice, const FiniteQuadraticModule& a,
                           const std::vector<FQMElement>& h_generators) {
  const RatMatrix b = overlattice_basis(lattice, a, h_generators);
  const RatMatrix g = b.transpose() * to_rational(lattice.gram()) * b;
  IntMatrix gi(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).get_den() != 1) throw PreconditionFailed("overlattice Gram matrix is not integral");
      gi(i, j) = g(i, j).get_num();
    }
  return IntegerLattice(std::move(gi));
}

IntegerLattice overlattice(const IntegerLattice& lattice, const std::vector<FQMElement>& h_generators) {
  return overlattice(lattice, discriminant_group(lattice), h_generators);
}

}  // namespace k3lat
