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

#include "pmat/core.hpp"

#include <algorithm>
#include <sstream>

namespace pmat {

FiniteMatroid::FiniteMatroid()
    : ground_(ElementSet::star()), circuits_{ElementSet::star()} {}

FiniteMatroid FiniteMatroid::from_trusted(ElementSet ground, CircuitSet circuits) {
  circuits.push_back(ElementSet::star());
  canonicalize(circuits);
  return FiniteMatroid(ground.with_star(), std::move(circuits));
}

std::strong_ordering FiniteMatroid::operator<=>(const FiniteMatroid& other) const {
  if (auto c = ground_ <=> other.ground_; c != 0) return c;
  return std::lexicographical_compare_three_way(circuits_.begin(), circuits_.end(),
                                                other.circuits_.begin(),
                                                other.circuits_.end());
}

std::string FiniteMatroid::to_string() const {
  std::ostringstream out;
  out << "ground " << ground_.to_string() << "; circuits";
  for (const ElementSet& c : circuits_) out << ' ' << c.to_string();
  return out.str();
}

void canonicalize(CircuitSet& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

CircuitSet minimal_nonempty(const CircuitSet& family) {
  CircuitSet sorted;
  sorted.reserve(family.size());
  for (ElementSet s : family) {
    if (!s.empty()) sorted.push_back(s);
  }
  canonicalize(sorted);
  CircuitSet out;
  for (ElementSet s : sorted) {
    const bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](ElementSet t) {
      return t.proper_subset_of(s);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

// First pair (c1, c2, e) violating pairwise elimination, if any.
struct EliminationWitness {
  ElementSet first;
  ElementSet second;
  Element element = 0;
};

bool find_elimination_failure(const CircuitSet& circuits, EliminationWitness* witness) {
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const ElementSet common = circuits[a] & circuits[b];
      const ElementSet both = circuits[a] | circuits[b];
      for (Element e : common) {
        const ElementSet target = both.without(e);
        const bool found = std::any_of(circuits.begin(), circuits.end(),
                                       [&](ElementSet c) { return c.subset_of(target); });
        if (!found) {
          if (witness != nullptr) *witness = {circuits[a], circuits[b], e};
          return true;
        }
      }
    }
  }
  return false;
}

std::string describe(const EliminationWitness& w) {
  return "at e=" + std::to_string(w.element) + ": no circuit inside (" + w.first.to_string() +
         " u " + w.second.to_string() + ") - " + std::to_string(w.element);
}

// The family form of elimination for one circuit `c` and a set X of
// eliminated elements, searching all families {C_x} by backtracking.
bool family_elimination_holds(const CircuitSet& circuits, ElementSet c, ElementSet x,
                              std::string* detail) {
  const std::vector<Element> xs = x.to_vector();
  std::vector<ElementSet> chosen(xs.size());

  auto check_family = [&]() {
    ElementSet cover;
    for (ElementSet cx : chosen) cover |= cx;
    const ElementSet span = (c | cover) - x;
    for (Element z : c - cover) {
      const bool ok = std::any_of(circuits.begin(), circuits.end(), [&](ElementSet d) {
        return d.contains(z) && d.subset_of(span);
      });
      if (!ok) {
        if (detail != nullptr) {
          std::ostringstream out;
          out << "C=" << c.to_string() << " X=" << x.to_string() << " z=" << z
              << " family";
          for (ElementSet cx : chosen) out << ' ' << cx.to_string();
          *detail = out.str();
        }
        return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == xs.size()) return check_family();
    for (ElementSet candidate : circuits) {
      // x_i in C_{x_i}, and no other member of X.
      if ((candidate & x) != ElementSet{}.with(xs[i])) continue;
      chosen[i] = candidate;
      if (!search(i + 1)) return false;
    }
    return true;
  };
  return search(0);
}

}  // namespace

FiniteMatroid make_matroid(ElementSet ground, const CircuitSet& raw_circuits) {
  ground = ground.with_star();
  CircuitSet circuits;
  circuits.reserve(raw_circuits.size() + 1);
  for (ElementSet c : raw_circuits) {
    if (c.empty()) throw MatroidError(ErrorKind::kEmptyCircuit, "empty set given as a circuit");
    if (!c.subset_of(ground)) {
      throw MatroidError(ErrorKind::kUnknownElement,
                         "circuit " + c.to_string() + " leaves ground " + ground.to_string());
    }
    circuits.push_back(c);
  }
  circuits.push_back(ElementSet::star());
  canonicalize(circuits);
  for (ElementSet a : circuits) {
    for (ElementSet b : circuits) {
      if (a.proper_subset_of(b)) {
        throw MatroidError(ErrorKind::kNotAntichain,
                           a.to_string() + " is contained in " + b.to_string());
      }
    }
  }
  EliminationWitness witness;
  if (find_elimination_failure(circuits, &witness)) {
    throw MatroidError(ErrorKind::kEliminationFailure, describe(witness));
  }
  return FiniteMatroid::from_trusted(ground, std::move(circuits));
}

bool AxiomReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.passed; });
}

const AxiomVerdict* AxiomReport::find(const std::string& axiom) const {
  for (const AxiomVerdict& v : verdicts) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

bool AxiomReport::passed(const std::string& axiom) const {
  const AxiomVerdict* v = find(axiom);
  return v != nullptr && v->passed;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (const AxiomVerdict& v : verdicts) {
    out << v.axiom << ": " << (v.passed ? "pass" : "FAIL");
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << '\n';
  }
  return out.str();
}

AxiomReport check_circuit_axioms(ElementSet ground, const CircuitSet& raw,
                                 std::size_t full_ce_bound) {
  CircuitSet circuits = raw;
  canonicalize(circuits);
  AxiomReport report;

  AxiomVerdict within{"ground", true, ""};
  for (ElementSet c : circuits) {
    if (!c.subset_of(ground)) {
      within = {"ground", false, c.to_string() + " leaves " + ground.to_string()};
      break;
    }
  }
  report.verdicts.push_back(within);

  AxiomVerdict pointed{"pointed", true, ""};
  if (!std::binary_search(circuits.begin(), circuits.end(), ElementSet::star())) {
    pointed = {"pointed", false, "{*} is not a circuit"};
  }
  report.verdicts.push_back(pointed);

  AxiomVerdict c0{"C0", true, ""};
  if (std::binary_search(circuits.begin(), circuits.end(), ElementSet{})) {
    c0 = {"C0", false, "empty set is a circuit"};
  }
  report.verdicts.push_back(c0);

  AxiomVerdict ci{"CI", true, ""};
  for (ElementSet a : circuits) {
    for (ElementSet b : circuits) {
      if (ci.passed && a.proper_subset_of(b)) {
        ci = {"CI", false, a.to_string() + " is contained in " + b.to_string()};
      }
    }
  }
  report.verdicts.push_back(ci);

  AxiomVerdict pairwise{"CE-pairwise", true, ""};
  EliminationWitness witness;
  if (find_elimination_failure(circuits, &witness)) {
    pairwise = {"CE-pairwise", false, describe(witness)};
  }
  report.verdicts.push_back(pairwise);

  AxiomVerdict family{"CE-family", true, "|X| <= " + std::to_string(full_ce_bound)};
  for (ElementSet c : circuits) {
    if (!family.passed) break;
    for_each_subset(c, [&](ElementSet x) {
      if (!family.passed || x.empty() || x.size() > full_ce_bound) return;
      std::string detail;
      if (!family_elimination_holds(circuits, c, x, &detail)) {
        family = {"CE-family", false, detail};
      }
    });
  }
  report.verdicts.push_back(family);

  report.verdicts.push_back({"CM", true, "vacuous on a finite ground set"});
  return report;
}

void require_subset(const FiniteMatroid& m, ElementSet x) {
  if (!x.subset_of(m.ground())) {
    throw MatroidError(ErrorKind::kUnknownElement,
                       x.to_string() + " is not a subset of " + m.ground().to_string());
  }
}

void require_tabulable(ElementSet ground) {
  if (ground.without_star().size() > kMaxTabulatedElements) {
    throw MatroidError(ErrorKind::kGroundTooLarge,
                       std::to_string(ground.without_star().size()) +
                           " elements exceed the tabulation limit of " +
                           std::to_string(kMaxTabulatedElements));
  }
}

ElementSet closure(const FiniteMatroid& m, ElementSet x) {
  require_subset(m, x);
  ElementSet out = x;
  for (ElementSet c : m.circuits()) {
    const ElementSet missing = c - x;
    if (missing.size() == 1) out |= missing;
  }
  return out;
}

bool is_independent(const FiniteMatroid& m, ElementSet x) {
  require_subset(m, x);
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [&](ElementSet c) { return c.subset_of(x); });
}

bool is_flat(const FiniteMatroid& m, ElementSet x) { return closure(m, x) == x; }

std::size_t rank(const FiniteMatroid& m, ElementSet x) {
  require_subset(m, x);
  ElementSet basis;
  for (Element e : x) {
    if (is_independent(m, basis.with(e))) basis = basis.with(e);
  }
  return basis.size();
}

std::size_t rank(const FiniteMatroid& m) { return rank(m, m.ground()); }

bool is_loop(const FiniteMatroid& m, Element e) {
  const ElementSet single = ElementSet{}.with(e);
  require_subset(m, single);
  return std::binary_search(m.circuits().begin(), m.circuits().end(), single);
}

bool is_coloop(const FiniteMatroid& m, Element e) {
  require_subset(m, ElementSet{}.with(e));
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [&](ElementSet c) { return c.contains(e); });
}

ClosureTable::ClosureTable(ElementSet ground, std::vector<ElementSet> values)
    : ground_(ground), values_(std::move(values)) {
  require_tabulable(ground_);
  if (values_.size() != subset_count(ground_)) {
    throw MatroidError(ErrorKind::kAxiomViolation, "closure table has the wrong size");
  }
}

ClosureTable ClosureTable::from_function(ElementSet ground,
                                         const std::function<ElementSet(ElementSet)>& cl) {
  require_tabulable(ground);
  std::vector<ElementSet> values(subset_count(ground));
  for (std::uint64_t i = 0; i < values.size(); ++i) values[i] = cl(expand(ground, i));
  return ClosureTable(ground, std::move(values));
}

ClosureTable closure_table(const FiniteMatroid& m) {
  return ClosureTable::from_function(m.ground(),
                                     [&](ElementSet x) { return closure(m, x); });
}

AxiomReport check_closure_axioms(const ClosureTable& cl) {
  const ElementSet ground = cl.ground();
  AxiomReport report;

  AxiomVerdict clo{"CLO", true, ""};
  auto fail_clo = [&](const std::string& why) {
    if (clo.passed) clo = {"CLO", false, why};
  };
  for_each_subset(ground, [&](ElementSet x) {
    const ElementSet cx = cl(x);
    if (!cx.subset_of(ground)) {
      fail_clo("cl" + x.to_string() + " leaves the ground set");
      return;
    }
    if (!x.subset_of(cx)) fail_clo("not extensive at " + x.to_string());
    if (cl(cx) != cx) fail_clo("not idempotent at " + x.to_string());
    for (Element e : ground - x) {
      if (!cx.subset_of(cl(x.with(e)))) {
        fail_clo("not monotone at " + x.to_string() + " + " + std::to_string(e));
      }
    }
  });
  report.verdicts.push_back(clo);

  AxiomVerdict cle{"CLE", true, ""};
  if (clo.passed) {
    for_each_subset(ground, [&](ElementSet z) {
      if (!cle.passed) return;
      const ElementSet cz = cl(z);
      for (Element x : ground) {
        const ElementSet grown = cl(z.with(x)) - cz;
        for (Element y : grown) {
          if (cle.passed && !cl(z.with(y)).contains(x)) {
            std::ostringstream out;
            out << "Z=" << z.to_string() << " x=" << x << " y=" << y;
            cle = {"CLE", false, out.str()};
          }
        }
      }
    });
  } else {
    cle = {"CLE", false, "skipped: CLO fails"};
  }
  report.verdicts.push_back(cle);

  report.verdicts.push_back({"CLM", true, "vacuous on a finite ground set"});

  AxiomVerdict pointed{"pointed", true, ""};
  if (!ground.contains_star() || !cl(ElementSet{}).contains_star()) {
    pointed = {"pointed", false, "* is not in cl({})"};
  }
  report.verdicts.push_back(pointed);
  return report;
}

CircuitSet circuits_from_closure(const ClosureTable& cl) {
  const AxiomReport report = check_closure_axioms(cl);
  if (!report.all_passed()) {
    throw MatroidError(ErrorKind::kAxiomViolation, report.to_string());
  }
  auto dependent = [&](ElementSet x) {
    for (Element e : x) {
      if (cl(x.without(e)).contains(e)) return true;
    }
    return false;
  };
  CircuitSet circuits;
  for_each_subset(cl.ground(), [&](ElementSet x) {
    if (x.empty() || !dependent(x)) return;
    for (Element e : x) {
      if (dependent(x.without(e))) return;
    }
    circuits.push_back(x);
  });
  canonicalize(circuits);
  return circuits;
}

std::vector<FiniteMatroid> matroid_catalog(std::size_t max_elements) {
  if (max_elements > 4) {
    throw MatroidError(ErrorKind::kGroundTooLarge,
                       "catalog enumeration is limited to 4 non-* elements");
  }
  std::vector<FiniteMatroid> catalog;
  for (std::size_t k = 0; k <= max_elements; ++k) {
    const ElementSet body = ElementSet::range(1, static_cast<Element>(k));
    const ElementSet ground = body.with_star();
    std::vector<ElementSet> candidates;
    for_each_subset(body, [&](ElementSet s) {
      if (!s.empty()) candidates.push_back(s);
    });
    std::vector<FiniteMatroid> level;
    const std::uint64_t families = std::uint64_t{1} << candidates.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
      CircuitSet circuits{ElementSet::star()};
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (((pick >> i) & 1U) != 0) circuits.push_back(candidates[i]);
      }
      if (check_circuit_axioms(ground, circuits, 0).all_passed()) {
        level.push_back(FiniteMatroid::from_trusted(ground, circuits));
      }
    }
    std::sort(level.begin(), level.end());
    catalog.insert(catalog.end(), level.begin(), level.end());
  }
  return catalog;
}

}  // namespace pmat
