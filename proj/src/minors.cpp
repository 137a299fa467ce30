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

#include "pmat/minors.hpp"

namespace pmat {

FiniteMatroid restrict(const FiniteMatroid& m, ElementSet s) {
  require_subset(m, s);
  const ElementSet ground = s.with_star();
  CircuitSet circuits;
  for (ElementSet c : m.circuits()) {
    if (c.subset_of(ground)) circuits.push_back(c);
  }
  return FiniteMatroid::from_trusted(ground, std::move(circuits));
}

FiniteMatroid contract(const FiniteMatroid& m, ElementSet s) {
  require_subset(m, s);
  s = s.without_star();
  if (s.empty()) return m;
  CircuitSet traces;
  traces.reserve(m.circuits().size());
  for (ElementSet c : m.circuits()) traces.push_back(c - s);
  return FiniteMatroid::from_trusted(m.ground() - s, minimal_nonempty(traces));
}

FiniteMatroid minor(const FiniteMatroid& m, ElementSet restrict_to, ElementSet contract_by) {
  require_subset(m, restrict_to);
  require_subset(m, contract_by);
  restrict_to = restrict_to.without_star();
  contract_by = contract_by.without_star();
  if (restrict_to.intersects(contract_by)) {
    throw MatroidError(ErrorKind::kNonDisjoint,
                       restrict_to.to_string() + " meets " + contract_by.to_string());
  }
  FiniteMatroid restrict_first = contract(restrict(m, restrict_to | contract_by), contract_by);
  FiniteMatroid contract_first = restrict(contract(m, contract_by), restrict_to);
  if (restrict_first != contract_first) {
    throw MatroidError(ErrorKind::kCommutationFailure,
                       restrict_first.to_string() + " vs " + contract_first.to_string());
  }
  return restrict_first;
}

}  // namespace pmat
