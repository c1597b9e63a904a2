#include "k3lat/json_io.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

Json to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const FQMElement& x) { return x.coeffs; }

Json to_json(const CohomologyTable& t) {
  Json out = Json::array();
  for (const auto& d : t.dims) out.push_back(to_json(d));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    const auto s = j.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) throw InvalidInput("not an integer: \"" + s + "\"");
    return x;
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an integer vector, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a nonempty matrix");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InvalidInput("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = vector_from_json(j[i]);
    if (row.size() != cols) throw InvalidInput("matrix rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

std::vector<std::int64_t> int64_list_from_json(const Json& j) {
  std::vector<std::int64_t> out;
  for (const auto& x : vector_from_json(j)) {
    if (!fits_int64(x)) throw InvalidInput("value out of range: " + x.get_str());
    out.push_back(to_int64(x));
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

IntegerLattice lattice_from_json(const Json& j) {
  if (j.is_array()) return IntegerLattice(matrix_from_json(j));
  if (!j.is_object() || !j.contains("gram")) throw InvalidInput("lattice JSON needs a \"gram\" field");
  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidInput("lattice \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return IntegerLattice(matrix_from_json(j["gram"]), name);
}

Json lattice_to_json(const IntegerLattice& lattice) {
  Json out{{"gram", to_json(lattice.gram())}};
  if (lattice.name()) out["name"] = *lattice.name();
  return out;
}

FQMElement element_from_json(const FiniteQuadraticModule& a, const Json& j) {
  FQMElement x{int64_list_from_json(j)};
  if (x.coeffs.size() != a.num_generators())
    throw InvalidInput("element " + j.dump() + " needs " + std::to_string(a.num_generators()) + " coefficients");
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) x.coeffs[i] = mod_floor(x.coeffs[i], a.divisors()[i]);
  return x;
}

FQMAutomorphism automorphism_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("automorphism must be a list of generator images");
  FQMAutomorphism f;
  for (const auto& img : j) f.images.push_back(FQMElement{int64_list_from_json(img)});
  return f;
}

Json automorphism_to_json(const FQMAutomorphism& f) {
  Json out = Json::array();
  for (const auto& x : f.images) out.push_back(to_json(x));
  return out;
}

FMCountProblem fm_problem_from_json(const Json& j, std::int64_t budget) {
  if (!j.is_object() || !j.contains("ns") || !j.contains("genus_reps"))
    throw InvalidInput("fm-count problem needs \"ns\" and \"genus_reps\"");
  if (!j["genus_reps"].is_array()) throw InvalidInput("\"genus_reps\" must be a list of Gram matrices");
  std::vector<IntegerLattice> reps;
  for (const auto& g : j["genus_reps"]) reps.push_back(lattice_from_json(g));
  FMCountProblem p{lattice_from_json(j["ns"]), std::move(reps), {}, 5, budget};
  if (j.contains("search_bound")) {
    p.search_bound = to_int64(integer_from_json(j["search_bound"]));
    if (p.search_bound < 1) throw InvalidInput("\"search_bound\" must be >= 1");
  }
  if (j.contains("hodge")) {
    const auto& h = j["hodge"];
    if (h.is_string()) {
      if (h.get<std::string>() != "pm-id") throw InvalidInput("\"hodge\" must be \"pm-id\" or {\"generators\": [...]}");
    } else if (h.is_object() && h.contains("generators") && h["generators"].is_array()) {
      p.hodge.mode = HodgeImageSpec::Mode::Explicit;
      for (const auto& g : h["generators"]) p.hodge.generators.push_back(automorphism_from_json(g));
    } else {
      throw InvalidInput("\"hodge\" must be \"pm-id\" or {\"generators\": [...]}");
    }
  }
  return p;
}

CollectionFile collection_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("bundles"))
    throw InvalidInput("collection file needs \"factors\" and \"bundles\"");
  CollectionFile c;
  c.space.factors = int64_list_from_json(j["factors"]);
  validate_space(c.space);
  if (!j["bundles"].is_array()) throw InvalidInput("\"bundles\" must be a list of degree tuples");
  for (const auto& b : j["bundles"]) {
    c.bundles.push_back(int64_list_from_json(b));
    if (c.bundles.back().size() != c.space.factors.size())
      throw InvalidInput("bundle " + std::to_string(c.bundles.size() - 1) + " has " +
                         std::to_string(c.bundles.back().size()) + " degrees, space has " +
                         std::to_string(c.space.factors.size()) + " factors");
  }
  return c;
}

}  // namespace k3lat
