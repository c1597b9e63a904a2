#include <doctest.h>

#include <json.hpp>
#include <string>

#include "k3lat/k3lat.h"

using nlohmann::json;

namespace {

json take(char* s) {
  json j = json::parse(s);
  k3l_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(k3l_version()) == "1.0.0");
  CHECK(std::string(k3l_status_name(K3L_OK)) == "ok");
  CHECK(std::string(k3l_status_name(K3L_BUDGET_EXCEEDED)) == "budget-exceeded");
}

TEST_CASE("lattice handles") {
  k3l_lattice* l = nullptr;
  REQUIRE(k3l_lattice_of_family("2-6b", &l) == K3L_OK);
  int64_t rank = 0;
  CHECK(k3l_lattice_rank(l, &rank) == K3L_OK);
  CHECK(rank == 2);
  char* out = nullptr;
  REQUIRE(k3l_lattice_invariants(l, &out) == K3L_OK);
  const auto inv = take(out);
  CHECK(inv["determinant"] == -12);
  CHECK(inv["signature"] == json::array({1, 1}));
  REQUIRE(k3l_lattice_represent(l, -2, 50, &out) == K3L_OK);
  CHECK(take(out).empty());
  int obstructed = 0;
  CHECK(k3l_lattice_congruence(l, -2, 4, &obstructed) == K3L_OK);
  CHECK(obstructed == 1);
  REQUIRE(k3l_complete_square2(l, "[1,0]", 0, &out) == K3L_OK);
  CHECK(take(out)["gram"] == json::parse("[[2,4],[4,2]]"));
  k3l_lattice_free(l);
}

TEST_CASE("errors map to status codes and set the message") {
  k3l_lattice* l = nullptr;
  CHECK(k3l_lattice_from_json("[[2,1],[0,2]]", &l) == K3L_INVALID_INPUT);
  CHECK(l == nullptr);
  CHECK(std::string(k3l_last_error()).find("symmetric") != std::string::npos);
  CHECK(k3l_lattice_from_json("[[2,", &l) == K3L_INVALID_INPUT);
  CHECK(k3l_lattice_from_json(nullptr, &l) == K3L_NULL_ARG);
  CHECK(k3l_lattice_of_family("9-9", &l) == K3L_INVALID_INPUT);

  REQUIRE(k3l_lattice_of_family("3-1", &l) == K3L_OK);
  char* out = nullptr;
  CHECK(k3l_genus_reps(l, 10000, &out) == K3L_PRECONDITION);
  CHECK(out == nullptr);
  k3l_fqm* a = nullptr;
  REQUIRE(k3l_fqm_from_lattice(l, &a) == K3L_OK);
  CHECK(k3l_fqm_orthogonal_group(a, 4, &out) == K3L_BUDGET_EXCEEDED);
  k3l_fqm_free(a);
  k3l_lattice_free(l);
  k3l_lattice_free(nullptr);
  k3l_fqm_free(nullptr);
}

TEST_CASE("discriminant groups through the handle API") {
  k3l_lattice* l = nullptr;
  REQUIRE(k3l_lattice_of_family("3-1", &l) == K3L_OK);
  k3l_fqm* a = nullptr;
  REQUIRE(k3l_fqm_from_lattice(l, &a) == K3L_OK);
  int64_t order = 0;
  CHECK(k3l_fqm_order(a, &order) == K3L_OK);
  CHECK(order == 16);
  char* out = nullptr;
  REQUIRE(k3l_fqm_describe(a, 10000, &out) == K3L_OK);
  const auto d = take(out);
  CHECK(d["divisors"] == json::array({2, 2, 4}));
  CHECK(d["elements"].size() == 16);
  REQUIRE(k3l_fqm_isotropic(a, 2, 10000, &out) == K3L_OK);
  CHECK(take(out)["count"] == 3);
  REQUIRE(k3l_fqm_isotropic(a, 4, 10000, &out) == K3L_OK);
  CHECK(take(out)["count"] == 0);
  k3l_lattice* m = nullptr;
  REQUIRE(k3l_lattice_overlattice(l, "[[1,0,0]]", &m) == K3L_OK);
  REQUIRE(k3l_lattice_invariants(m, &out) == K3L_OK);
  CHECK(take(out)["discriminant"] == 4);
  k3l_lattice_free(m);
  k3l_fqm* p = nullptr;
  REQUIRE(k3l_fqm_primary_part(a, 2, &p) == K3L_OK);
  REQUIRE(k3l_fqm_isometric(a, p, 10000, &out) == K3L_OK);
  CHECK(take(out)["isometric"] == true);
  k3l_fqm_free(p);
  k3l_fqm_free(a);
  k3l_lattice_free(l);

  k3l_fqm* v = nullptr;
  REQUIRE(k3l_fqm_van_geemen(&v) == K3L_OK);
  REQUIRE(k3l_fqm_isotropic(v, 2, 100, &out) == K3L_OK);
  CHECK(take(out)["count"] == 2);
  k3l_fqm_free(v);
}

TEST_CASE("forms, genus and partner counts") {
  char* out = nullptr;
  REQUIRE(k3l_class_count(12, &out) == K3L_OK);
  const auto c = take(out);
  CHECK(c["lattice_classes"] == 2);
  CHECK(k3l_class_count(9, &out) == K3L_INVALID_INPUT);
  REQUIRE(k3l_reduction_cycle("[1,2,-2]", &out) == K3L_OK);
  CHECK_FALSE(take(out).empty());

  k3l_lattice *a = nullptr, *b = nullptr;
  REQUIRE(k3l_lattice_from_json("[[2,2],[2,-4]]", &a) == K3L_OK);
  REQUIRE(k3l_lattice_from_json("[[-2,2],[2,4]]", &b) == K3L_OK);
  int same = -1;
  CHECK(k3l_same_genus(a, b, 10000, &same) == K3L_OK);
  CHECK(same == 0);
  k3l_lattice_free(a);
  k3l_lattice_free(b);

  REQUIRE(k3l_fm_count(R"({"ns": [[2,4],[4,2]], "genus_reps": [[[2,4],[4,2]]], "hodge": "pm-id"})", 10000, &out) == K3L_OK);
  const auto r = take(out);
  CHECK(r["count"] == 1);
  CHECK(r["exact"] == true);
}

TEST_CASE("geometry and cohomology") {
  char* out = nullptr;
  REQUIRE(k3l_verra_cubic(3, -5, &out) == K3L_OK);
  const auto v = take(out);
  CHECK(v["value"] == 6 * 3 * -5 * (3 - 5));
  CHECK(v["matches"] == true);
  REQUIRE(k3l_family_tensor("verra4", &out) == K3L_OK);
  CHECK(take(out)["arity"] == 4);
  REQUIRE(k3l_ext_table("[1,1,1]", "[0,0,0]", "[1,0,0]", &out) == K3L_OK);
  CHECK(take(out)["dims"] == json::array({2, 0, 0, 0}));
  REQUIRE(k3l_check_collection(R"({"factors": [1,1,1], "bundles": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})", &out) == K3L_OK);
  CHECK(take(out)["pass"] == true);
  REQUIRE(k3l_mutation_check("[1,1,1]", "[0,0,0]", "[-1,0,0]", "[1,0,0]", -1, 3, &out) == K3L_OK);
  CHECK(take(out)["pass"] == true);
  REQUIRE(k3l_mutation_check("[1,1,1]", "[0,0,0]", "[-1,0,0]", "[1,0,0]", 0, 3, &out) == K3L_OK);
  CHECK(take(out)["pass"] == false);
  REQUIRE(k3l_check_paper(&out) == K3L_OK);
  const auto p = take(out);
  CHECK(p["passed"] == p["total"]);
}
