#include "k3lat/fm_count.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "k3lat/binary_forms.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/genus.hpp"

namespace k3lat {

void for_each_isometry(const IntegerLattice& source, const IntegerLattice& target, std::int64_t bound,
                       const std::function<bool(const IntMatrix&)>& visit, std::int64_t max_candidates) {
  if (bound < 1) throw PreconditionFailed("isometry search bound must be >= 1");
  const std::size_t n = source.rank();
  if (target.rank() != n) return;
  if (abs(source.determinant()) != abs(target.determinant())) return;
  if (std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n)) >
      static_cast<double>(max_candidates))
    throw BudgetExceeded("isometry search box (2*" + std::to_string(bound) + "+1)^" + std::to_string(n) +
                         " is too large");

  const IntMatrix& gs = source.gram();
  const IntMatrix& gt = target.gram();
  std::map<Integer, std::vector<LatticeVector>> pools;
  std::map<Integer, std::vector<LatticeVector>> pool_images;  // G_target * v
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& norm = gs(j, j);
    if (pools.count(norm)) continue;
    auto vs = represent(target, norm, bound);
    std::vector<LatticeVector> gv;
    for (const auto& v : vs) gv.push_back(gt * v);
    pools.emplace(norm, std::move(vs));
    pool_images.emplace(norm, std::move(gv));
  }

  IntMatrix m(n, n);
  std::vector<const LatticeVector*> chosen(n, nullptr);
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t j) {
    if (stop) return;
    if (j == n) {
      if (!visit(m)) stop = true;
      return;
    }
    const auto& vs = pools.at(gs(j, j));
    const auto& gv = pool_images.at(gs(j, j));
    for (std::size_t c = 0; c < vs.size() && !stop; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        Integer s = 0;
        for (std::size_t r = 0; r < n; ++r) s += (*chosen[i])[r] * gv[c][r];
        ok = s == gs(i, j);
      }
      if (!ok) continue;
      chosen[j] = &vs[c];
      for (std::size_t r = 0; r < n; ++r) m(r, j) = vs[c][r];
      dfs(j + 1);
    }
  };
  dfs(0);
}

std::optional<IntMatrix> find_isometry(const IntegerLattice& source, const IntegerLattice& target,
                                       std::int64_t bound) {
  std::optional<IntMatrix> found;
  for_each_isometry(source, target, bound, [&](const IntMatrix& m) {
    found = m;
    return false;
  });
  return found;
}

namespace {

std::vector<FQMAutomorphism> close_automorphisms(const FiniteQuadraticModule& a,
                                                 const std::vector<FQMAutomorphism>& gens,
                                                 std::int64_t budget) {
  std::set<FQMAutomorphism> group{identity_automorphism(a)};
  std::vector<FQMAutomorphism> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<FQMAutomorphism> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        auto h = compose(a, g, f);
        if (group.insert(h).second) {
          if (static_cast<std::int64_t>(group.size()) > budget)
            throw BudgetExceeded("generated group exceeds the budget " + std::to_string(budget));
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

void require_subgroup(const std::set<Permutation>& g, const std::vector<Permutation>& h, const char* name) {
  std::set<Permutation> hs(h.begin(), h.end());
  if (hs.empty()) throw PreconditionFailed(std::string(name) + " is empty");
  for (const auto& x : hs) {
    if (!g.count(x)) throw PreconditionFailed(std::string(name) + " is not contained in G");
    for (const auto& y : hs)
      if (!hs.count(compose_perm(x, y))) throw PreconditionFailed(std::string(name) + " is not closed");
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// True iff `rep` is isometric to `ns`.
bool is_same_lattice(const IntegerLattice& ns, const IntegerLattice& rep, std::int64_t bound) {
  if (ns.gram() == rep.gram()) return true;
  if (ns.rank() != rep.rank()) return false;
  if (ns.rank() == 2 && is_indefinite(ns) && is_indefinite(rep)) {
    const auto f1 = to_form(ns), f2 = to_form(rep);
    if (f1.discriminant() != f2.discriminant()) return false;
    if (!is_square(f1.discriminant())) {
      const auto count = class_count(f1.discriminant());
      const auto p1 = proper_class_of(count, f1), p2 = proper_class_of(count, f2);
      for (const auto& cls : count.improper_classes)
        if (std::find(cls.begin(), cls.end(), p1) != cls.end())
          return std::find(cls.begin(), cls.end(), p2) != cls.end();
    }
  }
  return find_isometry(ns, rep, bound).has_value();
}

}  // namespace

IsometryImage isometry_image(const IntegerLattice& lattice, std::int64_t bound, std::int64_t budget) {
  const auto a = discriminant_group(lattice);
  IsometryImage out;
  out.orthogonal_order = orthogonal_group(a, budget).size();
  std::set<FQMAutomorphism> images;
  for_each_isometry(lattice, lattice, bound, [&](const IntMatrix& m) {
    ++out.isometries_found;
    images.insert(induced_automorphism(a, m));
    return true;
  });
  out.group = close_automorphisms(a, {images.begin(), images.end()}, budget);
  out.saturated = out.group.size() == out.orthogonal_order;
  return out;
}

std::vector<Permutation> close_group(const std::vector<Permutation>& generators, std::size_t degree,
                                     std::size_t budget) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators)
    if (g.size() != degree) throw InvalidInput("permutation has the wrong degree");
  std::set<Permutation> group{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& f : frontier)
      for (const auto& g : generators) {
        auto h = compose_perm(g, f);
        if (group.insert(h).second) {
          if (group.size() > budget) throw BudgetExceeded("permutation group exceeds the budget");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::size_t double_coset_count(const std::vector<Permutation>& g, const std::vector<Permutation>& h1,
                               const std::vector<Permutation>& h2) {
  const std::set<Permutation> gs(g.begin(), g.end());
  if (gs.empty()) throw PreconditionFailed("G is empty");
  require_subgroup(gs, h1, "H1");
  require_subgroup(gs, h2, "H2");
  const std::vector<Permutation> elems(gs.begin(), gs.end());
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto unite = [&](std::size_t i, const Permutation& y) {
    auto it = index.find(y);
    if (it == index.end()) throw PreconditionFailed("G is not closed under the action");
    parent[find_root(parent, i)] = find_root(parent, it->second);
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& x : h1) unite(i, compose_perm(x, elems[i]));
    for (const auto& y : h2) unite(i, compose_perm(elems[i], y));
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) orbits += find_root(parent, i) == i;
  return orbits;
}

FMCountReport fm_partner_count(const FMCountProblem& p) {
  if (p.genus_reps.empty()) throw PreconditionFailed("genus representative list is empty");
  FMCountReport report;
  bool found_ns = false;
  for (std::size_t i = 0; i < p.genus_reps.size(); ++i) {
    if (!same_genus(p.ns, p.genus_reps[i], p.budget))
      throw PreconditionFailed("genus representative " + std::to_string(i) + " is not in the genus of ns");
    if (!found_ns && is_same_lattice(p.ns, p.genus_reps[i], p.search_bound)) {
      found_ns = true;
      report.ns_index = i;
    }
  }
  if (!found_ns) throw PreconditionFailed("ns is not isometric to any of the genus representatives");

  for (std::size_t i = 0; i < p.genus_reps.size(); ++i) {
    const auto& rep = p.genus_reps[i];
    const auto a = discriminant_group(rep);
    const auto o = orthogonal_group(a, p.budget);
    const auto image = isometry_image(rep, p.search_bound, p.budget);

    std::vector<FQMAutomorphism> hodge_gens;
    if (p.hodge.mode == HodgeImageSpec::Mode::PlusMinusId) {
      hodge_gens.push_back(negation_automorphism(a));
    } else {
      for (const auto& g : p.hodge.generators) {
        try {
          validate_automorphism(a, g);
        } catch (const PreconditionFailed& e) {
          throw PreconditionFailed("Hodge generator is invalid on representative " + std::to_string(i) + ": " +
                                   e.what());
        }
        hodge_gens.push_back(g);
      }
    }
    const auto hodge = close_automorphisms(a, hodge_gens, p.budget);

    auto perms = [&](const std::vector<FQMAutomorphism>& fs) {
      std::vector<Permutation> out;
      for (const auto& f : fs) out.push_back(as_permutation(a, f));
      return out;
    };
    FMSummand s;
    s.index = i;
    s.orthogonal_order = o.size();
    s.image_order = image.group.size();
    s.hodge_order = hodge.size();
    s.isometries_found = image.isometries_found;
    s.saturated = image.saturated;
    s.double_cosets = double_coset_count(perms(o), perms(image.group), perms(hodge));
    report.count += s.double_cosets;
    if (!s.saturated)
      report.warnings.push_back("representative " + std::to_string(i) + ": image of found isometries has order " +
                                std::to_string(s.image_order) + " < |O(A_N)| = " +
                                std::to_string(s.orthogonal_order) + "; summand is an upper bound");
    report.summands.push_back(s);
  }
  return report;
}

}  // namespace k3lat
