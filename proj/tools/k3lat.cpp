// k3lat command line: every subcommand prints one JSON report on stdout.
// Exit codes: 0 ok, 1 failed check, 2 input or resource error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "k3lat/k3lat.h"

using Json = nlohmann::json;

namespace {

struct ApiError {
  k3l_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(k3l_status s) {
  if (s != K3L_OK) throw ApiError{s, k3l_last_error()};
}

Json take(char* s) {
  Json j = Json::parse(s);
  k3l_string_free(s);
  return j;
}

template <class F>
Json call(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return take(out);
}

struct Lattice {
  k3l_lattice* ptr = nullptr;
  Lattice() = default;
  Lattice(const Lattice&) = delete;
  Lattice& operator=(const Lattice&) = delete;
  ~Lattice() { k3l_lattice_free(ptr); }
};

struct Fqm {
  k3l_fqm* ptr = nullptr;
  Fqm() = default;
  Fqm(const Fqm&) = delete;
  Fqm& operator=(const Fqm&) = delete;
  ~Fqm() { k3l_fqm_free(ptr); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read file '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1,0,-1" or "[1,0,-1]" -> "[1,0,-1]"
std::string as_json_list(const std::string& text) {
  std::string t = text;
  if (t.empty() || t.front() != '[') t = "[" + t + "]";
  try {
    Json j = Json::parse(t);
    if (!j.is_array()) throw UsageError{"expected a list, got '" + text + "'"};
    return j.dump();
  } catch (const Json::parse_error&) {
    throw UsageError{"cannot parse list '" + text + "'"};
  }
}

struct Options {
  std::string file, file2, family, vector, mode = "auto", factors, bundle, from, to, e, f, g, subgroup;
  std::int64_t disc = 0, order = 0, bound = 0, budget = 10000, shift = 0, probe_radius = 3, n = 0, modulus = 0;
  std::int64_t a = 0, b = 0;
  bool json = true, show_tensor = false, other_root = false, van_geemen = false;
  CLI::App* sub = nullptr;
};

bool given(const Options& o, const std::string& name) { return o.sub->count("--" + name) > 0; }

std::int64_t bound_or(const Options& o, std::int64_t fallback) { return given(o, "bound") ? o.bound : fallback; }

void load_lattice(const Options& o, Lattice& l, Json& inputs) {
  if (!o.file.empty()) {
    inputs["file"] = o.file;
    const std::string text = read_file(o.file);
    check(k3l_lattice_from_json(text.c_str(), &l.ptr));
  } else if (!o.family.empty()) {
    inputs["family"] = o.family;
    check(k3l_lattice_of_family(o.family.c_str(), &l.ptr));
  } else {
    throw UsageError{"a lattice is required: pass --file <path> or --family <id>"};
  }
  inputs["lattice"] = call([&](char** out) { return k3l_lattice_to_json(l.ptr, out); });
}

void load_module(const Options& o, Fqm& a, Json& inputs) {
  if (o.van_geemen) {
    inputs["form"] = "van-geemen";
    check(k3l_fqm_van_geemen(&a.ptr));
    return;
  }
  Lattice l;
  load_lattice(o, l, inputs);
  check(k3l_fqm_from_lattice(l.ptr, &a.ptr));
}

struct Outcome {
  Json inputs = Json::object();
  Json result;
  std::vector<std::string> warnings;
  bool pass = true;
};

void run_command(const std::string& cmd, const Options& o, Outcome& r) {
  if (cmd == "invariants") {
    Lattice l;
    load_lattice(o, l, r.inputs);
    r.result = call([&](char** out) { return k3l_lattice_invariants(l.ptr, out); });
  } else if (cmd == "disc-group") {
    Fqm a;
    load_module(o, a, r.inputs);
    r.inputs["budget"] = o.budget;
    r.result = call([&](char** out) { return k3l_fqm_describe(a.ptr, o.budget, out); });
  } else if (cmd == "isotropic") {
    Fqm a;
    load_module(o, a, r.inputs);
    if (!given(o, "order")) throw UsageError{"isotropic needs --order <k>"};
    r.inputs["order"] = o.order;
    r.result = call([&](char** out) { return k3l_fqm_isotropic(a.ptr, o.order, o.budget, out); });
  } else if (cmd == "orth-group") {
    Fqm a;
    load_module(o, a, r.inputs);
    r.inputs["budget"] = o.budget;
    r.result = call([&](char** out) { return k3l_fqm_orthogonal_group(a.ptr, o.budget, out); });
  } else if (cmd == "reduced-forms" || cmd == "class-count") {
    if (!given(o, "disc")) throw UsageError{cmd + " needs --disc <D>"};
    r.inputs["disc"] = o.disc;
    r.result = call([&](char** out) {
      return cmd == "reduced-forms" ? k3l_reduced_forms(o.disc, out) : k3l_class_count(o.disc, out);
    });
  } else if (cmd == "genus-reps") {
    Lattice l;
    load_lattice(o, l, r.inputs);
    r.result = call([&](char** out) { return k3l_genus_reps(l.ptr, o.budget, out); });
  } else if (cmd == "same-genus") {
    Lattice l1, l2;
    load_lattice(o, l1, r.inputs);
    if (o.file2.empty()) throw UsageError{"same-genus needs --other <path>"};
    const std::string text = read_file(o.file2);
    check(k3l_lattice_from_json(text.c_str(), &l2.ptr));
    r.inputs["other"] = call([&](char** out) { return k3l_lattice_to_json(l2.ptr, out); });
    int same = 0;
    check(k3l_same_genus(l1.ptr, l2.ptr, o.budget, &same));
    r.result = {{"same_genus", same != 0}};
  } else if (cmd == "represent") {
    Lattice l;
    load_lattice(o, l, r.inputs);
    const std::int64_t bound = bound_or(o, 10);
    r.inputs["n"] = o.n;
    r.inputs["bound"] = bound;
    r.result["vectors"] = call([&](char** out) { return k3l_lattice_represent(l.ptr, o.n, bound, out); });
    if (given(o, "modulus")) {
      int obstructed = 0;
      check(k3l_lattice_congruence(l.ptr, o.n, o.modulus, &obstructed));
      r.inputs["modulus"] = o.modulus;
      r.result["congruence_obstruction"] = obstructed != 0;
    }
  } else if (cmd == "overlattice") {
    Lattice l, m;
    load_lattice(o, l, r.inputs);
    if (o.subgroup.empty()) throw UsageError{"overlattice needs --subgroup '[[c1,...],...]'"};
    r.inputs["subgroup"] = Json::parse(o.subgroup);
    check(k3l_lattice_overlattice(l.ptr, o.subgroup.c_str(), &m.ptr));
    r.result = call([&](char** out) { return k3l_lattice_to_json(m.ptr, out); });
    r.result["invariants"] = call([&](char** out) { return k3l_lattice_invariants(m.ptr, out); });
  } else if (cmd == "fm-count") {
    const std::int64_t bound = bound_or(o, 5);
    std::string problem;
    if (!o.file.empty()) {
      r.inputs["file"] = o.file;
      Json j = Json::parse(read_file(o.file));
      if (j.is_object() && j.contains("ns")) {
        if (given(o, "bound")) j["search_bound"] = bound;
        problem = j.dump();
      } else {
        Lattice l;
        check(k3l_lattice_from_json(j.dump().c_str(), &l.ptr));
        const Json reps = call([&](char** out) { return k3l_genus_reps(l.ptr, o.budget, out); });
        problem = Json{{"ns", j}, {"genus_reps", reps}, {"hodge", "pm-id"}, {"search_bound", bound}}.dump();
      }
    } else if (!o.family.empty()) {
      r.inputs["family"] = o.family;
      Lattice l;
      check(k3l_lattice_of_family(o.family.c_str(), &l.ptr));
      std::int64_t rank = 0;
      check(k3l_lattice_rank(l.ptr, &rank));
      if (rank != 2)
        throw UsageError{"genus representatives are only computed in rank 2; supply the genus of family " +
                         o.family + " with --file <problem.json>"};
      const Json ns = call([&](char** out) { return k3l_lattice_to_json(l.ptr, out); });
      const Json reps = call([&](char** out) { return k3l_genus_reps(l.ptr, o.budget, out); });
      problem = Json{{"ns", ns}, {"genus_reps", reps}, {"hodge", "pm-id"}, {"search_bound", bound}}.dump();
    } else {
      throw UsageError{"fm-count needs --family <id> or --file <problem.json>"};
    }
    r.inputs["problem"] = Json::parse(problem);
    r.inputs["budget"] = o.budget;
    r.result = call([&](char** out) { return k3l_fm_count(problem.c_str(), o.budget, out); });
    for (const auto& w : r.result["warnings"]) r.warnings.push_back(w.get<std::string>());
  } else if (cmd == "ns-lattice") {
    if (o.family.empty()) throw UsageError{"ns-lattice needs --family <id>"};
    r.inputs["family"] = o.family;
    Lattice l;
    check(k3l_lattice_of_family(o.family.c_str(), &l.ptr));
    r.result = call([&](char** out) { return k3l_lattice_to_json(l.ptr, out); });
    r.result["invariants"] = call([&](char** out) { return k3l_lattice_invariants(l.ptr, out); });
    if (o.show_tensor)
      r.result["base"] = call([&](char** out) { return k3l_family_tensor(o.family.c_str(), out); });
  } else if (cmd == "verra-cubic") {
    if (given(o, "a") != given(o, "b")) throw UsageError{"pass both --a and --b, or neither for a sweep"};
    if (given(o, "a")) {
      r.inputs["a"] = o.a;
      r.inputs["b"] = o.b;
      r.result = call([&](char** out) { return k3l_verra_cubic(o.a, o.b, out); });
      r.pass = r.result["matches"].get<bool>();
    } else {
      const std::int64_t bound = bound_or(o, 20);
      r.inputs["bound"] = bound;
      Json mismatches = Json::array();
      std::size_t checked = 0;
      for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
          const Json v = call([&](char** out) { return k3l_verra_cubic(a, b, out); });
          ++checked;
          if (!v["matches"].get<bool>()) mismatches.push_back({a, b});
        }
      r.result = {{"checked", checked}, {"mismatches", mismatches}};
      r.pass = mismatches.empty();
    }
    if (o.show_tensor) r.result["base"] = call([](char** out) { return k3l_family_tensor("verra4", out); });
  } else if (cmd == "complete-basis") {
    Lattice l;
    load_lattice(o, l, r.inputs);
    if (o.vector.empty()) throw UsageError{"complete-basis needs --vector v1,v2,..."};
    const std::string v = as_json_list(o.vector);
    r.inputs["vector"] = Json::parse(v);
    std::string mode = o.mode;
    if (mode == "auto") {
      const Json sq = call([&](char** out) { return k3l_lattice_inner(l.ptr, v.c_str(), v.c_str(), out); });
      mode = sq == 2 ? "square2" : sq == 0 ? "isotropic" : "primitive";
    }
    r.inputs["mode"] = mode;
    if (mode == "square2") {
      r.inputs["other_root"] = o.other_root;
      r.result = call([&](char** out) { return k3l_complete_square2(l.ptr, v.c_str(), o.other_root ? 1 : 0, out); });
    } else if (mode == "isotropic") {
      r.result = call([&](char** out) { return k3l_complete_isotropic(l.ptr, v.c_str(), out); });
    } else if (mode == "primitive") {
      r.result["basis"] = call([&](char** out) { return k3l_lattice_complete_basis(l.ptr, v.c_str(), out); });
    } else {
      throw UsageError{"unknown --mode '" + mode + "' (primitive, square2, isotropic, auto)"};
    }
  } else if (cmd == "cohomology") {
    if (o.factors.empty()) throw UsageError{"cohomology needs --factors n1,n2,..."};
    const std::string factors = as_json_list(o.factors);
    r.inputs["factors"] = Json::parse(factors);
    if (!o.bundle.empty()) {
      const std::string d = as_json_list(o.bundle);
      r.inputs["bundle"] = Json::parse(d);
      r.result = call([&](char** out) { return k3l_cohomology(factors.c_str(), d.c_str(), out); });
    } else if (!o.from.empty() && !o.to.empty()) {
      const std::string from = as_json_list(o.from), to = as_json_list(o.to);
      r.inputs["from"] = Json::parse(from);
      r.inputs["to"] = Json::parse(to);
      r.result = call([&](char** out) { return k3l_ext_table(factors.c_str(), from.c_str(), to.c_str(), out); });
    } else {
      throw UsageError{"cohomology needs --bundle d1,d2,... or --from/--to for Ext"};
    }
  } else if (cmd == "check-collection") {
    std::string text;
    if (!o.file.empty()) {
      r.inputs["file"] = o.file;
      text = read_file(o.file);
    } else if (!o.factors.empty() && !o.bundle.empty()) {
      text = Json{{"factors", Json::parse(as_json_list(o.factors))}, {"bundles", Json::parse(o.bundle)}}.dump();
    } else {
      throw UsageError{"check-collection needs --file <collection.json> or --factors with --bundles '[[..],..]'"};
    }
    r.inputs["collection"] = Json::parse(text);
    r.result = call([&](char** out) { return k3l_check_collection(text.c_str(), out); });
    r.pass = r.result["pass"].get<bool>();
  } else if (cmd == "mutation-check") {
    if (o.factors.empty() || o.e.empty() || o.f.empty() || o.g.empty())
      throw UsageError{"mutation-check needs --factors, --E, --F, --G and --shift"};
    const std::string factors = as_json_list(o.factors), e = as_json_list(o.e), f = as_json_list(o.f),
                      g = as_json_list(o.g);
    r.inputs = {{"factors", Json::parse(factors)}, {"E", Json::parse(e)}, {"F", Json::parse(f)},
                {"G", Json::parse(g)}, {"shift", o.shift}, {"probe_radius", o.probe_radius}};
    r.result = call([&](char** out) {
      return k3l_mutation_check(factors.c_str(), e.c_str(), f.c_str(), g.c_str(), o.shift, o.probe_radius, out);
    });
    r.pass = r.result["pass"].get<bool>();
  } else if (cmd == "check-paper") {
    r.result = call([](char** out) { return k3l_check_paper(out); });
    r.pass = r.result["passed"] == r.result["total"];
  }
}

int emit(const std::string& command, const Json& inputs, const Json& result, const std::vector<std::string>& warnings,
         const std::string& status, const Json& error = nullptr) {
  Json report{{"command", command}, {"inputs", inputs}, {"result", result}, {"warnings", warnings}, {"status", status}};
  if (!error.is_null()) report["error"] = error;
  std::cout << report.dump(2) << "\n";
  return status == "pass" ? 0 : status == "fail" ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and line-bundle computations for K3 surfaces and Fano threefolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(k3l_version()));

  Options o;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"invariants", "determinant, discriminant, signature and parity"},
      {"disc-group", "discriminant group with its quadratic form"},
      {"isotropic", "isotropic subgroups of a given order"},
      {"orth-group", "orthogonal group of the discriminant form"},
      {"reduced-forms", "reduced indefinite binary forms of discriminant D"},
      {"class-count", "proper, improper and lattice class counts for discriminant D"},
      {"genus-reps", "genus representatives of a rank-2 indefinite lattice"},
      {"same-genus", "compare the genera of two lattices"},
      {"represent", "vectors of a given square in a box, with an optional congruence test"},
      {"overlattice", "even overlattice from an isotropic subgroup"},
      {"fm-count", "count Fourier-Mukai partners"},
      {"ns-lattice", "Neron-Severi lattice of the branch K3 surface of a family"},
      {"verra-cubic", "cubic intersection form on the Verra threefold"},
      {"complete-basis", "complete a vector to a basis"},
      {"cohomology", "line-bundle cohomology or Ext on a product of projective spaces"},
      {"check-collection", "check that line bundles form an exceptional collection"},
      {"mutation-check", "check a right mutation R_E F = G[shift]"},
      {"check-paper", "run the full list of reference checks"},
  };
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--file", o.file, "lattice / problem / collection JSON");
    sub->add_option("--family", o.family, "2-6b, 2-8, 3-1 or verra4");
    sub->add_option("--disc", o.disc, "binary form discriminant");
    sub->add_option("--order", o.order, "subgroup order");
    sub->add_option("--bound", o.bound, "coordinate bound for box searches");
    sub->add_option("--budget", o.budget, "enumeration budget")->capture_default_str();
    sub->add_flag("--json", o.json, "emit JSON (the default and only format)");
    sub->add_flag("--show-tensor", o.show_tensor, "include the intersection tensor");
    sub->add_flag("--van-geemen", o.van_geemen, "use the form x^2/2 + yz on (Z/2)^3");
    sub->add_option("--other", o.file2, "second lattice JSON");
    sub->add_option("--vector", o.vector, "lattice vector, e.g. 1,0,0");
    sub->add_option("--mode", o.mode, "primitive, square2, isotropic or auto");
    sub->add_flag("--other-root", o.other_root, "take the second root in square-2 completion");
    sub->add_option("--n", o.n, "target square");
    sub->add_option("--modulus", o.modulus, "modulus for the congruence test");
    sub->add_option("--subgroup", o.subgroup, "generators as JSON coefficient tuples");
    sub->add_option("--a", o.a);
    sub->add_option("--b", o.b);
    sub->add_option("--factors", o.factors, "projective factor dimensions, e.g. 1,1,1");
    sub->add_option("--bundle,--bundles", o.bundle, "degree tuple (or list of tuples)");
    sub->add_option("--from", o.from, "source line bundle for Ext");
    sub->add_option("--to", o.to, "target line bundle for Ext");
    sub->add_option("--E", o.e);
    sub->add_option("--F", o.f);
    sub->add_option("--G", o.g);
    sub->add_option("--shift", o.shift);
    sub->add_option("--probe-radius", o.probe_radius)->capture_default_str();
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit("", Json::object(), nullptr, {}, "error", {{"code", "usage"}, {"message", e.what()}});
  }

  std::string command;
  for (auto* sub : apps)
    if (sub->parsed()) {
      command = sub->get_name();
      o.sub = sub;
    }

  Outcome r;
  try {
    run_command(command, o, r);
  } catch (const ApiError& e) {
    return emit(command, r.inputs, nullptr, {}, "error", {{"code", k3l_status_name(e.status)}, {"message", e.message}});
  } catch (const UsageError& e) {
    return emit(command, r.inputs, nullptr, {}, "error", {{"code", "usage"}, {"message", e.message}});
  } catch (const Json::exception& e) {
    return emit(command, r.inputs, nullptr, {}, "error", {{"code", "invalid-input"}, {"message", e.what()}});
  }
  return emit(command, r.inputs, r.result, r.warnings, r.pass ? "pass" : "fail");
}
