#pragma once

// JSON encoding of library values (nlohmann::json). Integers that fit in 64
// bits are numbers, larger ones are decimal strings; rationals are "p/q".

#include <string>
#include <vector>

#include <json.hpp>

#include "k3lat/cohomology.hpp"
#include "k3lat/disc_group.hpp"
#include "k3lat/fm_count.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

using Json = nlohmann::json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatVector& v);
Json to_json(const FQMElement& x);
Json to_json(const CohomologyTable& t);

Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
std::vector<std::int64_t> int64_list_from_json(const Json& j);

/// Parses text, throwing InvalidInput with the parser message on failure.
Json parse_json(const std::string& text);

/// {"name": optional, "gram": [[...]]} or a bare Gram array.
IntegerLattice lattice_from_json(const Json& j);
Json lattice_to_json(const IntegerLattice& lattice);

FQMElement element_from_json(const FiniteQuadraticModule& a, const Json& j);
FQMAutomorphism automorphism_from_json(const Json& j);
Json automorphism_to_json(const FQMAutomorphism& f);

/// {"ns": gram, "genus_reps": [gram,...], "hodge": "pm-id" | {"generators": [...]},
///  "search_bound": int}
FMCountProblem fm_problem_from_json(const Json& j, std::int64_t budget);

struct CollectionFile {
  ProductSpace space;
  std::vector<LineBundle> bundles;
};

/// {"factors": [...], "bundles": [[...], ...]}
CollectionFile collection_from_json(const Json& j);

}  // namespace k3lat
