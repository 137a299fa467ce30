// Copyright 2026 The Authors.
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

// pmat: command-line front end for the pointed matroid library.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmat/core.hpp"
#include "pmat/error.hpp"
#include "pmat/finitary.hpp"
#include "pmat/flats.hpp"
#include "pmat/grothendieck.hpp"
#include "pmat/io.hpp"
#include "pmat/minors.hpp"
#include "pmat/proto_exact.hpp"
#include "pmat/strong_map.hpp"

namespace {

using nlohmann::json;
using namespace pmat;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kValidationError = 2;

struct Output {
  bool json_mode = false;
  json doc = json::object();
  std::ostringstream text;

  void flush() const {
    if (json_mode) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text.str();
    }
  }
};

std::vector<std::string> set_names(const NamedMatroid& m, ElementSet s) {
  std::vector<std::string> out;
  std::istringstream words(m.format_set(s));
  std::string w;
  while (words >> w) out.push_back(w);
  return out;
}

json report_json(const AxiomReport& report) {
  json out = json::array();
  for (const auto& v : report.verdicts) {
    out.push_back({{"axiom", v.axiom}, {"passed", v.passed}, {"detail", v.detail}});
  }
  return out;
}

json circuits_json(const NamedMatroid& m) {
  json out = json::array();
  for (ElementSet c : m.matroid.circuits()) {
    if (c != ElementSet::star()) out.push_back(set_names(m, c));
  }
  return out;
}

json map_json(const PointedMap& f, const NamedMatroid& source, const NamedMatroid& target) {
  json out = json::object();
  for (Element e : f.source().without_star()) out[source.name_of(e)] = target.name_of(f(e));
  return out;
}

json universality_json(const UniversalityReport& r) {
  return {{"holds", r.holds},
          {"probes", r.probes},
          {"cones_checked", r.cones_checked},
          {"existence_failures", r.existence_failures},
          {"uniqueness_failures", r.uniqueness_failures},
          {"witness", r.witness}};
}

// Names for a matroid derived from `base`: keep every name base knows.
NamedMatroid derived(const NamedMatroid& base, FiniteMatroid m) {
  return base.with_matroid(std::move(m));
}

struct ValidateArgs {
  std::string file;
  std::size_t ce_bound = 2;
};

int run_validate(const ValidateArgs& args, Output& out) {
  const NamedMatroid m = read_matroid_file(args.file);
  const AxiomReport report = check_circuit_axioms(m.matroid.ground(), m.matroid.circuits(),
                                                  args.ce_bound);
  out.doc = {{"file", args.file},
             {"valid", report.all_passed()},
             {"elements", m.matroid.size()},
             {"circuits", circuits_json(m)},
             {"axioms", report_json(report)}};
  const std::size_t count = m.matroid.circuits().size() - 1;
  out.text << (report.all_passed() ? "valid" : "invalid") << ": " << m.matroid.size()
           << (m.matroid.size() == 1 ? " element, " : " elements, ") << count
           << (count == 1 ? " circuit\n" : " circuits\n")
           << report.to_string();
  return report.all_passed() ? kOk : kValidationError;
}

struct ClosureArgs {
  std::string file;
  std::string set;
};

int run_closure(const ClosureArgs& args, Output& out) {
  const NamedMatroid m = read_matroid_file(args.file);
  const ElementSet cl = closure(m.matroid, m.parse_set(args.set));
  out.doc = {{"closure", set_names(m, cl)}, {"rank", rank(m.matroid, cl)}};
  out.text << m.format_set(cl) << '\n';
  return kOk;
}

struct FlatsArgs {
  std::string file;
  bool dot = false;
};

int run_flats(const FlatsArgs& args, Output& out) {
  const NamedMatroid m = read_matroid_file(args.file);
  const FlatLattice lattice = flats(m.matroid);
  if (args.dot) {
    const std::string dot =
        to_dot(lattice, [&](ElementSet f) { return "{" + m.format_set(f) + "}"; });
    out.doc = {{"dot", dot}};
    out.text << dot;
    return kOk;
  }
  json list = json::array();
  for (ElementSet f : lattice.elements()) {
    const bool atom = std::find(lattice.atoms().begin(), lattice.atoms().end(), f) !=
                      lattice.atoms().end();
    list.push_back({{"flat", set_names(m, f)}, {"rank", rank(m.matroid, f)}, {"atom", atom}});
    out.text << "rank " << rank(m.matroid, f) << (atom ? " atom " : "      ") << "{"
             << m.format_set(f) << "}\n";
  }
  json covers = json::array();
  for (const auto& [lo, hi] : lattice.covers()) covers.push_back({lo, hi});
  out.doc = {{"flats", list}, {"covers", covers}};
  return kOk;
}

struct MinorArgs {
  std::string file;
  std::string restrict_to;
  std::string contract_by;
};

int run_minor(const MinorArgs& args, Output& out) {
  const NamedMatroid m = read_matroid_file(args.file);
  const ElementSet t = m.parse_set(args.contract_by);
  const ElementSet s = args.restrict_to.empty() ? m.matroid.ground().without_star() - t
                                                : m.parse_set(args.restrict_to);
  const NamedMatroid result = derived(m, minor(m.matroid, s, t));
  out.doc = {{"elements", set_names(result, result.matroid.ground().without_star())},
             {"circuits", circuits_json(result)}};
  out.text << emit_matroid(result);
  return kOk;
}

struct MapArgs {
  std::string source;
  std::string target;
  std::string map;
  int condition = 1;
};

int run_map_check(const MapArgs& args, Output& out) {
  const NamedMatroid m = read_matroid_file(args.source);
  const NamedMatroid n = read_matroid_file(args.target);
  const PointedMap f = read_map_file(args.map, m, n);
  const bool strong = is_strong(f, m.matroid, n.matroid,
                                static_cast<StrongCondition>(args.condition));
  out.doc = {{"map", map_json(f, m, n)}, {"condition", args.condition}, {"strong", strong}};
  if (!strong) {
    out.text << "not strong (condition " << args.condition << ")\n";
    return kDomainError;
  }
  const bool mono = is_admissible_mono(f, m.matroid, n.matroid);
  const bool epi = is_admissible_epi(f, m.matroid, n.matroid);
  out.doc["monic"] = f.injective();
  out.doc["epic"] = f.surjective();
  out.doc["admissible_mono"] = mono;
  out.doc["admissible_epi"] = epi;
  out.text << "strong (condition " << args.condition << ")\n"
           << "monic: " << (f.injective() ? "yes" : "no") << '\n'
           << "epic: " << (f.surjective() ? "yes" : "no") << '\n'
           << "admissible mono: " << (mono ? "yes" : "no") << '\n'
           << "admissible epi: " << (epi ? "yes" : "no") << '\n';
  return kOk;
}

struct SquareArgs {
  bool cospan = false;
  bool span = false;
  std::vector<std::string> mono;
  std::vector<std::string> epi;
  bool verify = false;
  std::size_t probe_size = 2;
};

struct LoadedMap {
  NamedMatroid source;
  NamedMatroid target;
  StrongMap map;
};

LoadedMap load_strong(const std::vector<std::string>& paths) {
  NamedMatroid s = read_matroid_file(paths[0]);
  NamedMatroid t = read_matroid_file(paths[1]);
  PointedMap f = read_map_file(paths[2], s, t);
  StrongMap g = StrongMap::certify(f, s.matroid, t.matroid);
  return {std::move(s), std::move(t), std::move(g)};
}

void describe_square(const Square& sq, const NamedMatroid& names_n, const NamedMatroid& names_m,
                     const NamedMatroid& names_mp, const NamedMatroid& names_np, Output& out) {
  const auto corner = [](const NamedMatroid& nm) {
    return json{{"elements", set_names(nm, nm.matroid.ground().without_star())},
                {"circuits", circuits_json(nm)}};
  };
  out.doc["M"] = corner(names_m);
  out.doc["N"] = corner(names_n);
  out.doc["M'"] = corner(names_mp);
  out.doc["N'"] = corner(names_np);
  out.doc["i"] = map_json(sq.i().map(), names_m, names_n);
  out.doc["j"] = map_json(sq.j().map(), names_m, names_mp);
  out.doc["i'"] = map_json(sq.i_prime().map(), names_mp, names_np);
  out.doc["j'"] = map_json(sq.j_prime().map(), names_n, names_np);
  const auto section = [&](const char* title, const std::string& body) {
    out.text << "== " << title << '\n' << body;
  };
  section("M", emit_matroid(names_m));
  section("N", emit_matroid(names_n));
  section("M'", emit_matroid(names_mp));
  section("N'", emit_matroid(names_np));
  section("i: M -> N", emit_map(sq.i().map(), names_m, names_n));
  section("j: M -> M'", emit_map(sq.j().map(), names_m, names_mp));
  section("i': M' -> N'", emit_map(sq.i_prime().map(), names_mp, names_np));
  section("j': N -> N'", emit_map(sq.j_prime().map(), names_n, names_np));
}

int run_square(const SquareArgs& args, Output& out) {
  if (args.cospan == args.span) {
    throw MatroidError(ErrorKind::kParseError, "give exactly one of --cospan and --span");
  }
  if (args.probe_size < 1 || args.probe_size > 3) {
    throw MatroidError(ErrorKind::kParseError, "--probe-size must be 1, 2 or 3");
  }
  const LoadedMap mono = load_strong(args.mono);
  const LoadedMap epi = load_strong(args.epi);
  std::optional<Square> sq;
  if (args.cospan) {
    // mono: M' -> N', epi: N -> N'
    sq = complete_square_from_cospan(mono.map, epi.map);
    describe_square(*sq, epi.source, derived(epi.source, sq->m()), mono.source, mono.target, out);
  } else {
    // epi: M -> M', mono: M -> N
    sq = complete_square_from_span(epi.map, mono.map);
    describe_square(*sq, mono.target, mono.source, epi.target,
                    derived(mono.target, sq->n_prime()), out);
  }
  if (args.verify) {
    const auto probes = matroid_catalog(args.probe_size);
    const auto cart = cartesian_report(*sq, probes);
    const auto cocart = cocartesian_report(*sq, probes);
    out.doc["cartesian"] = universality_json(cart);
    out.doc["cocartesian"] = universality_json(cocart);
    out.text << "== verification\n"
             << "cartesian: " << cart.to_string() << '\n'
             << "cocartesian: " << cocart.to_string() << '\n';
    if (!cart.holds || !cocart.holds) return kDomainError;
  }
  return kOk;
}

struct FinArgs {
  std::string descriptor;
  std::size_t window = 4;
};

int run_fin(const FinArgs& args, Output& out) {
  const SymbolicMatroid s = parse_descriptor(args.descriptor);
  const SymbolicMatroid fin = finitize(s);
  const bool strong = finitize_is_strong(s, args.window);
  const NamedMatroid shown = NamedMatroid::numbered(restrict_window(fin, args.window));
  out.doc = {{"descriptor", s.to_string()},
             {"finitization", fin.to_string()},
             {"finitary", s.finitary()},
             {"window", args.window},
             {"identity_strong", strong},
             {"window_circuits", circuits_json(shown)}};
  out.text << "fin(" << s.to_string() << ") = " << fin.to_string() << '\n'
           << "finitary: " << (s.finitary() ? "yes" : "no") << '\n'
           << "identity fin -> M strong on window " << args.window << ": "
           << (strong ? "yes" : "no") << '\n'
           << "== window " << args.window << " of the finitization\n"
           << emit_matroid(shown);
  return strong ? kOk : kDomainError;
}

struct ColimitArgs {
  std::string descriptor;
  std::string target;
  std::string map;
  std::size_t window = 6;
};

int run_colimit(const ColimitArgs& args, Output& out) {
  const SymbolicMatroid base = parse_descriptor(args.descriptor);
  const NamedMatroid target = read_matroid_file(args.target);
  const NamedMatroid source = NamedMatroid::numbered(restrict_window(base, args.window));
  const PointedMap top = read_map_file(args.map, source, target);
  const Cocone cocone = Cocone::from_map(base, target.matroid, top, args.window);
  const ColimitReport report = colimit_check(base, cocone, args.window);
  out.doc = {{"windows", report.windows},
             {"legs_strong", report.legs_strong},
             {"induced_strong", report.induced_strong},
             {"unique", report.unique},
             {"passed", report.passed()},
             {"detail", report.detail}};
  if (report.induced) out.doc["induced"] = map_json(*report.induced, source, target);
  out.text << report.to_string() << '\n';
  if (report.induced) out.text << "== induced map\n" << emit_map(*report.induced, source, target);
  return report.passed() ? kOk : kDomainError;
}

int run_k0(const std::string& file, Output& out) {
  const NamedMatroid m = read_matroid_file(file);
  const KClass k = k0_class(m.matroid);
  out.doc = {{"rank", k.rank}, {"corank", k.corank}};
  out.text << k.to_string() << '\n';
  return kOk;
}

struct DeriveArgs {
  std::size_t rank = 1;
  bool semiring = false;
};

int run_derive(const DeriveArgs& args, Output& out) {
  const Derivation d = derive_collapse(args.rank, !args.semiring);
  json steps = json::array();
  for (const auto& step : d.steps) {
    steps.push_back({{"lhs", step.lhs.to_string()}, {"rhs", step.rhs.to_string()}});
  }
  out.doc = {{"rank", d.rank},
             {"cancellation", d.cancellation},
             {"verified", d.verify()},
             {"collapsed", d.reached_zero()},
             {"steps", steps},
             {"transcript", d.transcript()}};
  out.text << d.transcript();
  return d.verify() ? kOk : kDomainError;
}

struct AxiomsArgs {
  std::string file;
  bool proto_exact = false;
  std::size_t universe_size = 2;
  std::size_t probe_size = 3;
  std::size_t ce_bound = 2;
};

int run_axioms(const AxiomsArgs& args, Output& out) {
  if (args.proto_exact) {
    if (args.universe_size > 3 || args.probe_size > 3) {
      throw MatroidError(ErrorKind::kParseError, "universe and probe sizes are at most 3");
    }
    const auto universe = matroid_catalog(args.universe_size);
    const auto probes = matroid_catalog(args.probe_size);
    const AxiomReport report = check_proto_exact_axioms(universe, probes);
    // Admissible maps in both classes, compared against isomorphisms.
    std::size_t both = 0;
    std::size_t isos = 0;
    for (const auto& m : universe) {
      for (const auto& n : universe) {
        for (const auto& f : strong_pointed_maps(m, n)) {
          if (!is_admissible_mono(f, m, n) || !is_admissible_epi(f, m, n)) continue;
          ++both;
          if (f.injective() && f.surjective() && transport(m.circuits(), f) == n.circuits()) ++isos;
        }
      }
    }
    out.doc = {{"universe", universe.size()},
               {"probes", probes.size()},
               {"axioms", report_json(report)},
               {"mono_and_epi", both},
               {"mono_and_epi_isomorphisms", isos}};
    out.text << "universe: " << universe.size() << " matroids on <= " << args.universe_size
             << " elements; probes: " << probes.size() << " matroids on <= " << args.probe_size
             << " elements\n"
             << report.to_string() << "admissible mono and epi: " << both
             << " maps, isomorphisms among them: " << isos << '\n';
    return report.all_passed() ? kOk : kDomainError;
  }
  if (args.file.empty()) {
    throw MatroidError(ErrorKind::kParseError, "axioms needs FILE or --proto-exact");
  }
  const NamedMatroid m = read_matroid_file(args.file);
  const AxiomReport circuits = check_circuit_axioms(m.matroid.ground(), m.matroid.circuits(),
                                                    args.ce_bound);
  const AxiomReport closures = check_closure_axioms(closure_table(m.matroid));
  out.doc = {{"circuit_axioms", report_json(circuits)}, {"closure_axioms", report_json(closures)}};
  out.text << "== circuit axioms\n"
           << circuits.to_string() << "== closure axioms\n"
           << closures.to_string();
  return circuits.all_passed() && closures.all_passed() ? kOk : kValidationError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pmat: pointed matroids and strong maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json_mode, "Emit a JSON report");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Parse a .mtr file and check the circuit axioms");
  validate_cmd->add_option("file", validate.file)->required();
  validate_cmd->add_option("--ce-bound", validate.ce_bound, "Largest X in the family elimination check");

  ClosureArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "Closure of a set");
  closure_cmd->add_option("file", closure_args.file)->required();
  closure_cmd->add_option("--set", closure_args.set, "Comma-separated element names")->required();

  FlatsArgs flats_args;
  auto* flats_cmd = app.add_subcommand("flats", "Lattice of flats");
  flats_cmd->add_option("file", flats_args.file)->required();
  flats_cmd->add_flag("--dot", flats_args.dot, "Hasse diagram in DOT");

  MinorArgs minor_args;
  auto* minor_cmd = app.add_subcommand("minor", "Restriction and contraction");
  minor_cmd->add_option("file", minor_args.file)->required();
  minor_cmd->add_option("--restrict", minor_args.restrict_to, "Keep these elements (default all)");
  minor_cmd->add_option("--contract", minor_args.contract_by, "Contract these elements");

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map-check", "Check that a map is strong");
  map_cmd->add_option("source", map_args.source)->required();
  map_cmd->add_option("target", map_args.target)->required();
  map_cmd->add_option("map", map_args.map)->required();
  map_cmd->add_option("--condition", map_args.condition, "1 closure, 2 flat preimages, 3 lattice")
      ->check(CLI::Range(1, 3));

  SquareArgs square_args;
  auto* square_cmd = app.add_subcommand("square-complete", "Complete a cospan or span to a square");
  square_cmd->add_flag("--cospan", square_args.cospan, "Complete M' -> N' <- N");
  square_cmd->add_flag("--span", square_args.span, "Complete M' <- M -> N");
  square_cmd->add_option("--mono", square_args.mono, "SRC TGT MAP of the admissible mono")
      ->expected(3)
      ->required();
  square_cmd->add_option("--epi", square_args.epi, "SRC TGT MAP of the admissible epi")
      ->expected(3)
      ->required();
  square_cmd->add_flag("--verify", square_args.verify, "Check the universal properties");
  square_cmd->add_option("--probe-size", square_args.probe_size, "Probe catalog size (default 2)");

  FinArgs fin_args;
  auto* fin_cmd = app.add_subcommand("fin", "Finitization of a symbolic matroid");
  fin_cmd->add_option("descriptor", fin_args.descriptor)->required();
  fin_cmd->add_option("--window", fin_args.window, "Window size (default 4)");

  ColimitArgs colimit_args;
  auto* colimit_cmd = app.add_subcommand("colimit-check", "Check a cocone out of the window chain");
  colimit_cmd->add_option("descriptor", colimit_args.descriptor)->required();
  colimit_cmd->add_option("--target", colimit_args.target)->required();
  colimit_cmd->add_option("--map", colimit_args.map, "Map from window names 1..n")->required();
  colimit_cmd->add_option("--window", colimit_args.window, "Largest window (default 6)");

  std::string k0_file;
  auto* k0_cmd = app.add_subcommand("k0", "Class (rank, corank)");
  k0_cmd->add_option("file", k0_file)->required();

  DeriveArgs derive_args;
  auto* derive_cmd = app.add_subcommand("tg-derive", "Collapse derivation for [U_r(omega)]");
  derive_cmd->add_option("--rank", derive_args.rank)->required();
  derive_cmd->add_flag("--semiring", derive_args.semiring, "Disallow cancellation");

  AxiomsArgs axioms_args;
  auto* axioms_cmd = app.add_subcommand("axioms", "Axiom reports");
  axioms_cmd->add_option("file", axioms_args.file);
  axioms_cmd->add_flag("--proto-exact", axioms_args.proto_exact, "Check the proto-exact axioms");
  axioms_cmd->add_option("--universe-size", axioms_args.universe_size, "Default 2");
  axioms_cmd->add_option("--probe-size", axioms_args.probe_size, "Default 3");
  axioms_cmd->add_option("--ce-bound", axioms_args.ce_bound, "Default 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  int status = kOk;
  try {
    if (*validate_cmd) status = run_validate(validate, out);
    if (*closure_cmd) status = run_closure(closure_args, out);
    if (*flats_cmd) status = run_flats(flats_args, out);
    if (*minor_cmd) status = run_minor(minor_args, out);
    if (*map_cmd) status = run_map_check(map_args, out);
    if (*square_cmd) status = run_square(square_args, out);
    if (*fin_cmd) status = run_fin(fin_args, out);
    if (*colimit_cmd) status = run_colimit(colimit_args, out);
    if (*k0_cmd) status = run_k0(k0_file, out);
    if (*derive_cmd) status = run_derive(derive_args, out);
    if (*axioms_cmd) status = run_axioms(axioms_args, out);
  } catch (const MatroidError& e) {
    const int code = is_validation_error(e.kind()) ? kValidationError : kDomainError;
    if (out.json_mode) {
      std::cout << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return code;
  }
  out.flush();
  return status;
}
