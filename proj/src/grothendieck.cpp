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

#include "pmat/grothendieck.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pmat/minors.hpp"

namespace pmat {

std::string KClass::to_string() const {
  return "(" + std::to_string(rank) + ", " + std::to_string(corank) + ")";
}

KClass k0_class(const FiniteMatroid& m) {
  const std::size_t r = rank(m);
  return {r, m.size() - r};
}

bool check_additivity(const FiniteMatroid& m, ElementSet s) {
  require_subset(m, s);
  return k0_class(m) == k0_class(restrict(m, s)) + k0_class(contract(m, s));
}

FiniteMatroid canonical_form(const FiniteMatroid& m) {
  const std::vector<Element> elems = m.ground().without_star().to_vector();
  if (elems.size() > 8) {
    throw MatroidError(ErrorKind::kGroundTooLarge, "canonical form limited to 8 elements");
  }
  std::vector<Element> perm(elems.size());
  std::iota(perm.begin(), perm.end(), Element{1});
  std::vector<Element> relabel(kMaxElementId + 1, kStar);
  CircuitSet best;
  bool have = false;
  do {
    for (std::size_t i = 0; i < elems.size(); ++i) relabel[elems[i]] = perm[i];
    CircuitSet mapped;
    for (ElementSet c : m.circuits()) {
      ElementSet img;
      for (Element e : c) img = img.with(relabel[e]);
      mapped.push_back(img);
    }
    canonicalize(mapped);
    if (!have || mapped < best) {
      best = std::move(mapped);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FiniteMatroid::from_trusted(
      ElementSet::range(1, static_cast<Element>(elems.size())).with_star(), best);
}

ClassLabel ClassLabel::uniform_omega(std::size_t rank) { return ClassLabel(UniformOmega{rank}); }

ClassLabel ClassLabel::finite(const FiniteMatroid& m) {
  if (m.size() == 0) return zero();
  return ClassLabel(Finite{canonical_form(m)});
}

ClassLabel ClassLabel::zero() { return ClassLabel(Zero{}); }

std::string ClassLabel::to_string() const {
  if (const auto* u = std::get_if<UniformOmega>(&value_)) {
    return "[U_" + std::to_string(u->rank) + "(omega)]";
  }
  if (const auto* f = std::get_if<Finite>(&value_)) {
    std::ostringstream out;
    out << "[M(" << f->canonical.size();
    bool first = true;
    for (ElementSet c : f->canonical.circuits()) {
      if (c == ElementSet::star()) continue;
      out << (first ? ": " : " | ");
      first = false;
      bool first_elem = true;
      for (Element e : c) {
        out << (first_elem ? "" : " ") << e;
        first_elem = false;
      }
    }
    out << ")]";
    return out.str();
  }
  return "0";
}

std::strong_ordering ClassLabel::operator<=>(const ClassLabel& other) const {
  if (auto c = value_.index() <=> other.value_.index(); c != 0) return c;
  if (const auto* u = std::get_if<UniformOmega>(&value_)) {
    return std::get<UniformOmega>(other.value_).rank <=> u->rank;
  }
  if (const auto* f = std::get_if<Finite>(&value_)) {
    const FiniteMatroid& g = std::get<Finite>(other.value_).canonical;
    if (auto c = f->canonical.size() <=> g.size(); c != 0) return c;
    return f->canonical <=> g;
  }
  return std::strong_ordering::equal;
}

FormalSum::FormalSum(const ClassLabel& label, long long coefficient) { add(label, coefficient); }

long long FormalSum::coefficient(const ClassLabel& label) const {
  const auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum& FormalSum::add(const ClassLabel& label, long long coefficient) {
  const long long updated = (terms_[label] += coefficient);
  if (updated == 0) terms_.erase(label);
  return *this;
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
  FormalSum out = *this;
  for (const auto& [label, c] : other.terms_) out.add(label, c);
  return out;
}

FormalSum FormalSum::operator-(const FormalSum& other) const {
  FormalSum out = *this;
  for (const auto& [label, c] : other.terms_) out.add(label, -c);
  return out;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [label, c] : terms_) {
    const long long magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (magnitude != 1) out << magnitude;
    out << label.to_string();
    first = false;
  }
  return out.str();
}

FormalSum delete_contract_step(const FormalSum& sum, const ClassLabel& label, Element e) {
  if (sum.coefficient(label) == 0) {
    throw MatroidError(ErrorKind::kLabelAbsent, label.to_string() + " does not occur");
  }
  FormalSum out = sum;
  out.add(label, -1);
  if (const auto* u = std::get_if<ClassLabel::UniformOmega>(&label.value())) {
    if (u->rank == 0) {
      throw MatroidError(ErrorKind::kSideConditionViolated,
                         "every element of " + label.to_string() + " is a loop");
    }
    out.add(ClassLabel::uniform_omega(u->rank), 1);
    out.add(ClassLabel::uniform_omega(u->rank - 1), 1);
    return out;
  }
  if (const auto* f = std::get_if<ClassLabel::Finite>(&label.value())) {
    const FiniteMatroid& m = f->canonical;
    if (e == kStar || !m.ground().contains(e)) {
      throw MatroidError(ErrorKind::kUnknownElement,
                         std::to_string(e) + " is not a non-* element of " + label.to_string());
    }
    if (is_loop(m, e) || is_coloop(m, e)) {
      throw MatroidError(ErrorKind::kSideConditionViolated,
                         std::to_string(e) + " is a loop or coloop of " + label.to_string());
    }
    out.add(ClassLabel::finite(restrict(m, m.ground().without(e))), 1);
    out.add(ClassLabel::finite(contract(m, ElementSet{e})), 1);
    return out;
  }
  throw MatroidError(ErrorKind::kSideConditionViolated, "the zero class has no elements");
}

bool Derivation::reached_zero() const {
  if (steps.empty()) return false;
  const DerivationStep& last = steps.back();
  return last.lhs.empty() && last.rhs == FormalSum(ClassLabel::uniform_omega(rank));
}

bool Derivation::verify() const {
  if (steps.empty() || steps.front().kind != DerivationStep::Kind::kGenerator) return false;
  const DerivationStep& start = steps.front();
  if (start.lhs != FormalSum(start.label) || start.rhs != start.lhs) return false;
  FormalSum lhs = start.lhs;
  FormalSum rhs = start.rhs;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const DerivationStep& step = steps[i];
    switch (step.kind) {
      case DerivationStep::Kind::kGenerator:
        return false;
      case DerivationStep::Kind::kRewrite:
        try {
          rhs = delete_contract_step(rhs, step.label, step.element);
        } catch (const MatroidError&) {
          return false;
        }
        break;
      case DerivationStep::Kind::kCancel:
        if (!cancellation || lhs.coefficient(step.label) < 1 || rhs.coefficient(step.label) < 1) {
          return false;
        }
        lhs.add(step.label, -1);
        rhs.add(step.label, -1);
        break;
      case DerivationStep::Kind::kBlocked:
        if (cancellation) return false;
        break;
    }
    if (lhs != step.lhs || rhs != step.rhs) return false;
  }
  return true;
}

std::string Derivation::transcript() const {
  std::ostringstream out;
  out << "collapse of " << ClassLabel::uniform_omega(rank).to_string() << " ("
      << (cancellation ? "ring" : "semiring, no cancellation") << ")\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const DerivationStep& s = steps[i];
    out << i + 1 << ". ";
    switch (s.kind) {
      case DerivationStep::Kind::kGenerator:
        out << "generator " << s.label.to_string();
        break;
      case DerivationStep::Kind::kRewrite:
        out << "delete-contract " << s.label.to_string() << " at e=" << s.element;
        break;
      case DerivationStep::Kind::kCancel:
        out << "cancel " << s.label.to_string();
        break;
      case DerivationStep::Kind::kBlocked:
        out << "blocked: cancelling " << s.label.to_string() << " needs additive inverses";
        break;
    }
    out << ": " << s.lhs.to_string() << " = " << s.rhs.to_string() << '\n';
  }
  if (reached_zero()) {
    out << ClassLabel::uniform_omega(rank).to_string() << " = 0\n";
  } else {
    out << "no collapse derived\n";
  }
  return out.str();
}

Derivation derive_collapse(std::size_t rank, bool cancellation) {
  Derivation d;
  d.rank = rank;
  d.cancellation = cancellation;
  const ClassLabel top = ClassLabel::uniform_omega(rank + 1);

  DerivationStep start;
  start.kind = DerivationStep::Kind::kGenerator;
  start.label = top;
  start.lhs = FormalSum(top);
  start.rhs = start.lhs;
  d.steps.push_back(start);

  // Any point of omega works: omega minus a point is again omega.
  constexpr Element kPoint = 1;
  DerivationStep rewrite;
  rewrite.kind = DerivationStep::Kind::kRewrite;
  rewrite.label = top;
  rewrite.element = kPoint;
  rewrite.lhs = start.lhs;
  rewrite.rhs = delete_contract_step(start.rhs, top, kPoint);
  d.steps.push_back(rewrite);

  DerivationStep last;
  last.label = top;
  last.lhs = rewrite.lhs;
  last.rhs = rewrite.rhs;
  if (cancellation) {
    last.kind = DerivationStep::Kind::kCancel;
    last.lhs.add(top, -1);
    last.rhs.add(top, -1);
  } else {
    last.kind = DerivationStep::Kind::kBlocked;
  }
  d.steps.push_back(last);
  return d;
}

}  // namespace pmat
