// Copyright 2026 The lch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lch-cli: command-line front end over the C interface.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lch/lch.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitNegative = 3;

struct Failure {
  int code;
  std::string message;
};

struct ResultDeleter {
  void operator()(lch_result* r) const { lch_result_free(r); }
};
struct PolytopeDeleter {
  void operator()(lch_polytope* p) const { lch_polytope_free(p); }
};
struct TypeDeleter {
  void operator()(lch_type* t) const { lch_type_free(t); }
};
using PolytopePtr = std::unique_ptr<lch_polytope, PolytopeDeleter>;
using TypePtr = std::unique_ptr<lch_type, TypeDeleter>;

void check(lch_status s) {
  if (s == LCH_OK) return;
  std::string msg = std::string(lch_status_name(s)) + ": " + lch_last_error();
  throw Failure{s == LCH_E_INTERNAL ? kExitInternal : kExitMalformed, msg};
}

template <class F>
Json call(F&& f) {
  lch_result* raw = nullptr;
  check(f(&raw));
  std::unique_ptr<lch_result, ResultDeleter> r(raw);
  return Json::parse(lch_result_json(r.get()));
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw Failure{kExitMalformed, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1/2,-1/3" or a JSON array; returns the JSON array text.
std::string rational_list(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return text;
  Json a = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(item);
  return a.dump();
}

bool color_enabled() {
  const char* c = std::getenv("LCH_COLOR");
  return c && std::string(c) == "1";
}

std::string verdict_word(bool ok, const std::string& yes, const std::string& no) {
  if (!color_enabled()) return ok ? yes : no;
  return ok ? "\033[32m" + yes + "\033[0m" : "\033[31m" + no + "\033[0m";
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string format = "tsv";

  std::string file;
  std::string builtin;
  long n = 0;
  std::string op = "inspect";

  long face = 0;
  std::string lambda;

  std::string areas;

  long cover = 1;
  std::string max_action = "1";
  bool all_sheets = false;
  long rank = 0;

  bool truncation = false;
  std::string tau_y, tau_z, w1, w2;

  bool sphere = false;
  std::string chern, m;
  long e_black = 0;
  long ambient = 0;

  std::string first, second;
  bool merge = false;
};

PolytopePtr load_polytope(const Options& o) {
  lch_polytope* raw = nullptr;
  if (!o.file.empty() && !o.builtin.empty()) throw Failure{kExitMalformed, "give either --file or --builtin"};
  if (!o.file.empty()) {
    check(lch_polytope_parse(slurp(o.file).c_str(), &raw));
  } else if (o.builtin == "simplex") {
    check(lch_polytope_simplex(o.n, &raw));
  } else if (o.builtin.empty()) {
    throw Failure{kExitMalformed, "an input polytope is required"};
  } else {
    throw Failure{kExitMalformed, "unknown built-in polytope '" + o.builtin + "'"};
  }
  return PolytopePtr(raw);
}

TypePtr load_type(const std::string& path) {
  lch_type* raw = nullptr;
  check(lch_type_parse(slurp(path).c_str(), &raw));
  return TypePtr(raw);
}

int run_polytope(const Options& o) {
  auto p = load_polytope(o);
  Json j;
  if (o.op == "inspect") {
    j = call([&](lch_result** r) { return lch_polytope_inspect(p.get(), r); });
  } else if (o.op == "cone") {
    j = call([&](lch_result** r) { return lch_polytope_cone(p.get(), r); });
  } else if (o.op == "faces") {
    j = call([&](lch_result** r) { return lch_polytope_faces(p.get(), r); });
  } else {
    throw Failure{kExitMalformed, "unknown polytope operation '" + o.op + "'"};
  }
  if (o.format == "json") {
    print_json(j);
    return kExitOk;
  }
  if (o.op == "faces") {
    std::cout << "index\tactive\tdim\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::cout << i << "\t" << j[i]["active"].dump() << "\t" << j[i]["dim"] << "\n";
    }
    return kExitOk;
  }
  const Json& poly = o.op == "cone" ? j : j["polytope"];
  std::cout << "normal\toffset\n";
  for (const auto& f : poly["facets"]) std::cout << f["normal"].dump() << "\t" << scalar(f["offset"]) << "\n";
  if (j.contains("vertices")) {
    std::cout << "vertex\ttight\n";
    for (const auto& v : j["vertices"]) std::cout << v["point"].dump() << "\t" << v["tight"].dump() << "\n";
  }
  return kExitOk;
}

int run_reduce(const Options& o) {
  auto p = load_polytope(o);
  std::string lam = rational_list(o.lambda);
  Json j = call([&](lch_result** r) { return lch_reduce(p.get(), o.face, lam.c_str(), r); });
  if (o.format == "json") {
    print_json(j);
  } else {
    std::cout << "smooth\t" << j["smooth"].dump() << "\n";
    std::cout << "h1_normal\t" << j["h1_normal"].dump() << "\n";
    std::cout << "u0\t" << scalar(j["u0"]) << "\n";
    const Json& line = j["filling_line"];
    std::cout << "filling_line\t" << line["lambda"].dump() << " x [" << scalar(line["s_min"]) << ", "
              << scalar(line["s_max"]) << "]\n";
    std::cout << "normal\toffset\n";
    for (const auto& f : j["reduced"]["facets"]) {
      std::cout << f["normal"].dump() << "\t" << scalar(f["offset"]) << "\n";
    }
  }
  return kExitOk;
}

int run_lift(const Options& o) {
  std::string areas = rational_list(o.areas);
  Json j = call([&](lch_result** r) { return lch_lift(areas.c_str(), r); });
  bool ok = j["exists"].get<bool>();
  if (o.format == "json") {
    print_json(j);
  } else if (ok) {
    std::cout << verdict_word(true, "lift exists", "") << "; fiber order divides "
              << scalar(j["fiber_order_divisor"]) << "\n";
  } else {
    std::cout << verdict_word(false, "", "no lift") << "; area subgroup is dense\n";
  }
  return ok ? kExitOk : kExitNegative;
}

int run_chords(const Options& o) {
  Json j = call([&](lch_result** r) { return lch_chords(o.cover, o.max_action.c_str(), o.all_sheets, r); });
  if (o.format == "json") {
    print_json(j);
    return kExitOk;
  }
  std::cout << "d\tm\taction\tstart_sheet\tend_sheet\n";
  for (const auto& c : j) {
    std::cout << c["d"] << "\t" << c["m"] << "\t" << scalar(c["action"]) << "\t" << c["start_sheet"] << "\t"
              << c["end_sheet"] << "\n";
  }
  return kExitOk;
}

int run_generators(const Options& o) {
  Json j = call([&](lch_result** r) { return lch_generators(o.cover, o.rank, o.max_action.c_str(), r); });
  if (o.format == "json") {
    print_json(j);
    return kExitOk;
  }
  std::cout << "color\td\tm\taction\tcritical_point\tindex\n";
  for (const auto& w : j["white"]) {
    std::cout << "white\t" << w["d"] << "\t" << w["m"] << "\t" << scalar(w["action"]) << "\t"
              << scalar(w["critical_point"]) << "\t" << w["index"] << "\n";
  }
  for (const auto& b : j["black"]) {
    std::cout << "black\t-\t-\t-\t" << scalar(b["critical_point"]) << "\t" << b["index"] << "\n";
  }
  std::cout << "total\t" << j["total"] << "\n";
  return kExitOk;
}

int run_tame(const Options& o) {
  int sources = (!o.file.empty()) + (!o.builtin.empty()) + (o.truncation ? 1 : 0);
  if (sources != 1) throw Failure{kExitMalformed, "give exactly one of --file, --builtin, --truncation"};
  Json j;
  if (!o.file.empty()) {
    std::string text = slurp(o.file);
    j = call([&](lch_result** r) { return lch_tame(text.c_str(), r); });
  } else if (!o.builtin.empty()) {
    j = call([&](lch_result** r) { return lch_tame_builtin(o.builtin.c_str(), o.n, r); });
  } else {
    j = call([&](lch_result** r) {
      return lch_tame_truncation(o.tau_y.c_str(), o.tau_z.c_str(), o.w1.c_str(), o.w2.c_str(), r);
    });
  }
  const Json& v = j["verdict"];
  bool tame = v["overall"].get<bool>();
  if (o.format == "json") {
    print_json(v);
  } else {
    std::cout << "verdict\t" << verdict_word(tame, "tame", "not tame") << "\n";
    std::cout << "p1\t" << v["p1"].dump() << "\n";
    std::cout << "p2\t" << v["p2"].dump() << "\n";
    std::cout << "lambda_minus\t" << scalar(v["lambda_minus"]) << "\n";
    std::cout << "p3\t" << scalar(v["p3"]) << "\n";
    std::cout << "lambda_plus\t" << scalar(v["lambda_plus"]) << "\n";
    std::cout << "ends_tame\t" << v["ends_tame"].dump() << "\n";
    for (const auto& c : v["certificate"]) {
      std::cout << "class\t" << scalar(c["name"]) << "\t" << scalar(c["table"]) << "\t" << scalar(c["omega"])
                << "\t" << scalar(c["value"]) << "\t" << scalar(c["residual"]) << "\n";
    }
  }
  return tame ? kExitOk : kExitNegative;
}

int run_dim(const Options& o) {
  Json j;
  if (o.sphere) {
    j = call([&](lch_result** r) {
      return lch_sphere_dim(o.chern.c_str(), o.m.c_str(), o.e_black, o.ambient, r);
    });
    if (o.format == "json") {
      print_json(j);
    } else {
      for (const auto& [k, v] : j.items()) std::cout << k << "\t" << scalar(v) << "\n";
    }
    return kExitOk;
  }
  if (o.file.empty()) throw Failure{kExitMalformed, "a type file or --sphere is required"};
  auto t = load_type(o.file);
  j = call([&](lch_result** r) { return lch_type_dim(t.get(), r); });
  bool stable = j["stability"]["stable"].get<bool>();
  if (o.format == "json") {
    print_json(j);
  } else {
    std::cout << "stable\t" << verdict_word(stable, "true", "false") << "\n";
    if (stable) {
      std::cout << "domain_dim\t" << j["domain_dim"] << "\n";
      std::cout << "total_dim\t" << j["total_dim"] << "\n";
    }
    std::cout << "canonical_form\t" << scalar(j["canonical_form"]) << "\n";
  }
  return stable ? kExitOk : kExitNegative;
}

int run_strata(const Options& o) {
  if (o.file.empty()) throw Failure{kExitMalformed, "a type file is required"};
  auto t = load_type(o.file);
  Json j = call([&](lch_result** r) { return lch_type_strata(t.get(), r); });
  if (o.format == "json") {
    print_json(j);
    return kExitOk;
  }
  std::cout << "boundary\tkind\tdescription\n";
  for (const char* side : {"true", "fake"}) {
    for (const auto& s : j[side]) {
      std::cout << side << "\t" << scalar(s["kind"]) << "\t" << scalar(s["description"]) << "\n";
    }
  }
  return kExitOk;
}

int run_sheets(const Options& o) {
  std::string a = slurp(o.first);
  std::string b = slurp(o.second);
  Json j = call([&](lch_result** r) { return lch_sheets(a.c_str(), b.c_str(), o.merge, r); });
  if (o.format == "json") {
    print_json(j);
    return kExitOk;
  }
  std::cout << "id\tweight\n";
  for (const auto& s : j["sheets"]) std::cout << scalar(s["id"]) << "\t" << scalar(s["weight"]) << "\n";
  std::cout << "count\t" << j["count"] << "\n";
  std::cout << "total_weight\t" << scalar(j["total_weight"]) << "\n";
  return kExitOk;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics for Legendrian contact homology over circle-fibered contact manifolds"};
  app.set_version_flag("--version", lch_version());
  app.require_subcommand(1);
  Options o;

  auto* polytope = app.add_subcommand("polytope", "Inspect a polytope, its cone or its codimension-two faces");
  polytope->add_option("--file", o.file, "Polytope JSON file ('-' for stdin)");
  polytope->add_option("--builtin", o.builtin, "Built-in polytope (simplex)");
  polytope->add_option("--n", o.n, "Size parameter for the built-in");
  polytope->add_option("--op", o.op, "Operation")->check(CLI::IsMember({"inspect", "cone", "faces"}));
  add_format(polytope, o);

  auto* reduce = app.add_subcommand("reduce", "Symplectic reduction slice at a codimension-two face of the cone");
  reduce->add_option("--file", o.file, "Polytope JSON file");
  reduce->add_option("--builtin", o.builtin, "Built-in polytope (simplex)");
  reduce->add_option("--n", o.n, "Size parameter for the built-in");
  reduce->add_option("--face", o.face, "Index into the face list of 'polytope --op faces'")->required();
  reduce->add_option("--lambda", o.lambda, "Point of the face, comma separated rationals")->required();
  add_format(reduce, o);

  auto* lift = app.add_subcommand("lift", "Decide whether a Lagrangian lifts to a Legendrian");
  lift->add_option("--areas", o.areas, "Area generators, comma separated rationals")->required();
  add_format(lift, o);

  auto* chords = app.add_subcommand("chords", "Reeb chords of a k-fold lift up to an action bound");
  chords->add_option("--cover", o.cover, "Number of lift points per fiber")->required();
  chords->add_option("--max-action", o.max_action, "Action bound (rational)")->required();
  chords->add_flag("--all-sheets", o.all_sheets, "List every start sheet instead of classes");
  add_format(chords, o);

  auto* generators = app.add_subcommand("generators", "Chekanov-Eliashberg generators with a Morse model");
  generators->add_option("--cover", o.cover, "Number of lift points per fiber")->required();
  generators->add_option("--rank", o.rank, "Rank of the Legendrian torus")->required();
  generators->add_option("--max-action", o.max_action, "Action bound (rational)")->required();
  add_format(generators, o);

  auto* tame = app.add_subcommand("tame", "Check tameness of a Lagrangian cobordism");
  tame->add_option("--file", o.file, "Cobordism class data JSON file");
  tame->add_option("--builtin", o.builtin,
                   "Built-in cobordism (trivial-cobordism, harvey-lawson, ball-blowup; optional @1)");
  tame->add_option("--n", o.n, "Dimension parameter for the built-in");
  tame->add_flag("--truncation", o.truncation, "Truncated symplectization between two weights");
  tame->add_option("--tau-y", o.tau_y, "Monotonicity constant of the base");
  tame->add_option("--tau-z", o.tau_z, "Curvature constant of the circle bundle");
  tame->add_option("--w1", o.w1, "Lower weight");
  tame->add_option("--w2", o.w2, "Upper weight");
  add_format(tame, o);

  auto* dim = app.add_subcommand("dim", "Stability and expected dimension of a building type");
  dim->add_option("type", o.file, "Building type JSON file");
  dim->add_flag("--sphere", o.sphere, "Dimension of a stratum of sphere bubbles instead");
  dim->add_option("--chern", o.chern, "Chern number of the sphere class");
  dim->add_option("--m", o.m, "Intersection number with the divisor");
  dim->add_option("--e-black", o.e_black, "Number of black edges");
  dim->add_option("--ambient", o.ambient, "Ambient moduli dimension");
  add_format(dim, o);

  auto* strata = app.add_subcommand("strata", "Codimension-one boundary strata of a rigid-plus-one type");
  strata->add_option("type", o.file, "Building type JSON file");
  add_format(strata, o);

  auto* sheets = app.add_subcommand("sheets", "Pull back two perturbation sheet sums to a fiber product");
  sheets->add_option("--first", o.first, "First sheet list JSON file")->required();
  sheets->add_option("--second", o.second, "Second sheet list JSON file")->required();
  sheets->add_flag("--merge", o.merge, "Merge equal sheets after pulling back");
  add_format(sheets, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*polytope) return run_polytope(o);
    if (*reduce) return run_reduce(o);
    if (*lift) return run_lift(o);
    if (*chords) return run_chords(o);
    if (*generators) return run_generators(o);
    if (*tame) return run_tame(o);
    if (*dim) return run_dim(o);
    if (*strata) return run_strata(o);
    if (*sheets) return run_sheets(o);
  } catch (const Failure& f) {
    std::cerr << "lch-cli: " << f.message << "\n";
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "lch-cli: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitMalformed;
}
