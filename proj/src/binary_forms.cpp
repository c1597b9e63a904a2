#include "k3lat/binary_forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "k3lat/errors.hpp"

namespace k3lat {

std::strong_ordering operator<=>(const BinaryQuadraticForm& x, const BinaryQuadraticForm& y) {
  for (auto [p, q] : {std::pair{&x.a, &y.a}, std::pair{&x.b, &y.b}, std::pair{&x.c, &y.c}}) {
    const int r = cmp(*p, *q);
    if (r != 0) return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntegerLattice to_lattice(const BinaryQuadraticForm& f) {
  IntMatrix g{{2 * f.a, f.b}, {f.b, 2 * f.c}};
  return IntegerLattice(std::move(g));
}

BinaryQuadraticForm to_form(const IntegerLattice& lattice) {
  if (lattice.rank() != 2)
    throw InvalidInput("binary form bridge needs a rank-2 lattice, got rank " + std::to_string(lattice.rank()));
  const auto& g = lattice.gram();
  return {g(0, 0) / 2, g(0, 1), g(1, 1) / 2};
}

void require_indefinite_discriminant(const Integer& d) {
  if (d <= 0) throw InvalidInput("discriminant must be positive for indefinite forms");
  const Integer r = mod_floor(d, Integer(4));
  if (r != 0 && r != 1) throw InvalidInput("discriminant must be 0 or 1 mod 4");
  if (is_square(d)) throw InvalidInput("discriminant " + d.get_str() + " is a perfect square");
}

bool is_reduced(const BinaryQuadraticForm& f) {
  const Integer d = f.discriminant();
  if (d <= 0 || is_square(d)) return false;
  if (f.b <= 0 || f.b * f.b >= d) return false;
  const Integer a2 = 2 * abs(f.a);
  // |sqrt(D) - 2|a|| < b  <=>  2|a| - b < sqrt(D) < 2|a| + b
  const Integer hi = a2 + f.b;
  if (hi * hi <= d) return false;
  const Integer lo = a2 - f.b;
  return lo <= 0 || lo * lo < d;
}

std::vector<BinaryQuadraticForm> enumerate_reduced(const Integer& d) {
  require_indefinite_discriminant(d);
  std::vector<BinaryQuadraticForm> out;
  const Integer s = isqrt(d);
  for (Integer b = 1; b <= s; ++b) {
    if (mod_floor(b * b - d, Integer(4)) != 0) continue;
    const Integer ac = (b * b - d) / 4;  // negative
    const Integer n = -ac;
    for (Integer a = 1; a <= n; ++a) {
      if (n % a != 0) continue;
      for (const Integer& sign : {Integer(1), Integer(-1)}) {
        BinaryQuadraticForm f{sign * a, b, ac / (sign * a)};
        if (is_reduced(f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BinaryQuadraticForm rho(const BinaryQuadraticForm& f) {
  const Integer d = f.discriminant();
  if (d <= 0 || is_square(d)) throw InvalidInput("reduction needs a positive non-square discriminant");
  if (f.c == 0) throw InvalidInput("form with c = 0 has square discriminant");
  const Integer m = 2 * abs(f.c);
  const Integer s = isqrt(d);
  Integer bp;
  if (abs(f.c) < s + 1) {  // |c| < sqrt(D)
    bp = s - mod_floor(s + f.b, m);
  } else {
    bp = mod_floor(-f.b, m);
    if (bp > abs(f.c)) bp -= m;
  }
  return {f.c, bp, (bp * bp - d) / (4 * f.c)};
}

std::vector<BinaryQuadraticForm> reduction_cycle(const BinaryQuadraticForm& f) {
  const Integer d = f.discriminant();
  if (d <= 0 || is_square(d)) throw InvalidInput("reduction needs a positive non-square discriminant");
  BinaryQuadraticForm g = f;
  for (std::size_t steps = 0; !is_reduced(g); ++steps) {
    if (steps > 100000) throw Error("reduction did not reach a reduced form");
    g = rho(g);
  }
  std::vector<BinaryQuadraticForm> cycle{g};
  for (BinaryQuadraticForm h = rho(g); h != g; h = rho(h)) cycle.push_back(h);
  return cycle;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ClassCount class_count(const Integer& d) {
  const auto reduced = enumerate_reduced(d);
  ClassCount out;
  std::map<BinaryQuadraticForm, std::size_t> cycle_of;
  for (const auto& f : reduced) {
    if (cycle_of.count(f)) continue;
    auto cyc = reduction_cycle(f);
    for (const auto& g : cyc) cycle_of[g] = out.cycles.size();
    out.cycles.push_back(std::move(cyc));
  }
  out.proper = out.cycles.size();

  std::vector<std::size_t> parent(out.proper);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& [f, i] : cycle_of) {
    const std::size_t j = cycle_of.at(BinaryQuadraticForm{f.c, f.b, f.a});
    parent[find_root(parent, i)] = find_root(parent, j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < out.proper; ++i) groups[find_root(parent, i)].push_back(i);
  for (auto& [root, members] : groups) out.improper_classes.push_back(std::move(members));
  std::sort(out.improper_classes.begin(), out.improper_classes.end());
  out.improper = out.improper_classes.size();
  out.lattice_classes = out.improper;
  return out;
}

std::size_t proper_class_of(const ClassCount& count, const BinaryQuadraticForm& f) {
  const auto cyc = reduction_cycle(f);
  for (std::size_t i = 0; i < count.cycles.size(); ++i)
    if (std::find(count.cycles[i].begin(), count.cycles[i].end(), cyc.front()) != count.cycles[i].end())
      return i;
  throw PreconditionFailed("form does not belong to this discriminant");
}

}  // namespace k3lat
