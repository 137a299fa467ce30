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

#include "pmat/finitary.hpp"

#include <algorithm>
#include <sstream>

#include "pmat/minors.hpp"

namespace pmat {

namespace {

constexpr std::uint64_t kMaxWindowCircuits = 1'000'000;

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string ground_name(const SymbolicGround& g) {
  if (std::holds_alternative<Omega>(g)) return "omega";
  return std::to_string(std::get<FiniteGround>(g).size);
}

// Elements of the ground visible in window n (without *).
ElementSet visible(const SymbolicGround& g, std::size_t n) {
  std::size_t top = n;
  if (const auto* f = std::get_if<FiniteGround>(&g)) top = std::min(top, f->size);
  return ElementSet::prefix_window(top).without_star();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
    if (out > kMaxWindowCircuits) return kMaxWindowCircuits + 1;
  }
  return out;
}

CircuitSet k_subsets(ElementSet body, std::size_t k) {
  if (binomial(body.size(), k) > kMaxWindowCircuits) {
    throw MatroidError(ErrorKind::kWindowTooLarge,
                       "more than " + std::to_string(kMaxWindowCircuits) + " circuits");
  }
  const std::vector<Element> elems = body.to_vector();
  CircuitSet out;
  if (k > elems.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet s;
    for (std::size_t i : idx) s = s.with(elems[i]);
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == elems.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

}  // namespace

SymbolicMatroid::SymbolicMatroid(Descriptor descriptor) : descriptor_(std::move(descriptor)) {
  auto check_ground = [](const SymbolicGround& g) {
    if (const auto* f = std::get_if<FiniteGround>(&g); f && f->size > kMaxElementId) {
      throw MatroidError(ErrorKind::kInvalidDescriptor,
                         "finite ground of " + std::to_string(f->size) + " elements");
    }
  };
  std::visit(Overloaded{
                 [&](const Uniform& u) { check_ground(u.ground); },
                 [&](const CoUniform& c) {
                   check_ground(c.ground);
                   if (c.corank == 0) {
                     throw MatroidError(ErrorKind::kInvalidDescriptor, "corank must be positive");
                   }
                   if (const auto* f = std::get_if<FiniteGround>(&c.ground);
                       f && f->size <= c.corank) {
                     throw MatroidError(ErrorKind::kInvalidDescriptor,
                                        "co-uniform ground must exceed the corank");
                   }
                 },
                 [&](const Free& f) { check_ground(f.ground); },
                 [](const Explicit&) {},
             },
             descriptor_);
}

bool SymbolicMatroid::over_omega() const {
  return std::visit(Overloaded{
                        [](const Uniform& u) { return std::holds_alternative<Omega>(u.ground); },
                        [](const CoUniform& c) { return std::holds_alternative<Omega>(c.ground); },
                        [](const Free& f) { return std::holds_alternative<Omega>(f.ground); },
                        [](const Explicit&) { return false; },
                    },
                    descriptor_);
}

bool SymbolicMatroid::finitary() const {
  const auto* c = std::get_if<CoUniform>(&descriptor_);
  return c == nullptr || !std::holds_alternative<Omega>(c->ground);
}

std::string SymbolicMatroid::to_string() const {
  return std::visit(
      Overloaded{
          [](const Uniform& u) {
            return "uniform(" + std::to_string(u.rank) + ", " + ground_name(u.ground) + ")";
          },
          [](const CoUniform& c) {
            return "couniform(" + std::to_string(c.corank) + ", " + ground_name(c.ground) + ")";
          },
          [](const Free& f) { return "free(" + ground_name(f.ground) + ")"; },
          [](const Explicit& e) { return "explicit(" + e.matroid.to_string() + ")"; },
      },
      descriptor_);
}

ElementSet window_ground(const SymbolicMatroid& s, std::size_t n) {
  return std::visit(Overloaded{
                        [&](const Uniform& u) { return visible(u.ground, n).with_star(); },
                        [&](const CoUniform& c) { return visible(c.ground, n).with_star(); },
                        [&](const Free& f) { return visible(f.ground, n).with_star(); },
                        [&](const Explicit& e) {
                          return e.matroid.ground() & ElementSet::prefix_window(n);
                        },
                    },
                    s.descriptor());
}

ElementSet windowed_closure(const SymbolicMatroid& s, ElementSet a, std::size_t n) {
  const ElementSet window = window_ground(s, n);
  if (!a.subset_of(window)) {
    throw MatroidError(ErrorKind::kUnknownElement,
                       a.to_string() + " leaves window " + window.to_string());
  }
  const std::size_t body = a.without_star().size();
  return std::visit(
      Overloaded{
          [&](const Uniform& u) { return body >= u.rank ? window : a.with_star(); },
          [&](const CoUniform& c) {
            // Infinite circuits never fit inside a finite A + e.
            if (std::holds_alternative<Omega>(c.ground)) return a.with_star();
            const std::size_t circuit = std::get<FiniteGround>(c.ground).size - c.corank;
            return body + 1 >= circuit ? window : a.with_star();
          },
          [&](const Free&) { return a.with_star(); },
          [&](const Explicit& e) { return closure(e.matroid, a) & window; },
      },
      s.descriptor());
}

FiniteMatroid restrict_window(const SymbolicMatroid& s, std::size_t n) {
  const ElementSet window = window_ground(s, n);
  return std::visit(
      Overloaded{
          [&](const Uniform& u) {
            return FiniteMatroid::from_trusted(window,
                                               k_subsets(window.without_star(), u.rank + 1));
          },
          [&](const CoUniform& c) {
            if (std::holds_alternative<Omega>(c.ground)) {
              return FiniteMatroid::from_trusted(window, {});
            }
            return restrict(materialize(s), window);
          },
          [&](const Free&) { return FiniteMatroid::from_trusted(window, {}); },
          [&](const Explicit& e) { return restrict(e.matroid, window); },
      },
      s.descriptor());
}

FiniteMatroid materialize(const SymbolicMatroid& s) {
  if (s.over_omega()) {
    throw MatroidError(ErrorKind::kNotEnumerable,
                       s.to_string() + " has an infinite ground set");
  }
  return std::visit(
      Overloaded{
          [](const Uniform& u) {
            const ElementSet body = visible(u.ground, kMaxElementId);
            return FiniteMatroid::from_trusted(body.with_star(), k_subsets(body, u.rank + 1));
          },
          [](const CoUniform& c) {
            const ElementSet body = visible(c.ground, kMaxElementId);
            return FiniteMatroid::from_trusted(body.with_star(),
                                               k_subsets(body, body.size() - c.corank));
          },
          [](const Free& f) {
            return FiniteMatroid::from_trusted(visible(f.ground, kMaxElementId).with_star(), {});
          },
          [](const Explicit& e) { return e.matroid; },
      },
      s.descriptor());
}

SymbolicMatroid finitize(const SymbolicMatroid& s) {
  if (const auto* c = std::get_if<CoUniform>(&s.descriptor());
      c != nullptr && std::holds_alternative<Omega>(c->ground)) {
    return SymbolicMatroid(Free{Omega{}});
  }
  return s;
}

bool finitize_is_strong(const SymbolicMatroid& s, std::size_t n) {
  if (n > kMaxTabulatedElements) {
    throw MatroidError(ErrorKind::kWindowTooLarge,
                       "window " + std::to_string(n) + " exceeds the tabulation limit");
  }
  const SymbolicMatroid fin = finitize(s);
  bool ok = true;
  for_each_subset(window_ground(s, n), [&](ElementSet a) {
    if (ok && !windowed_closure(fin, a, n).subset_of(windowed_closure(s, a, n))) ok = false;
  });
  return ok;
}

bool is_strong_on_window(const PointedMap& f, const SymbolicMatroid& s, std::size_t n,
                         const SymbolicMatroid& t, std::size_t m) {
  if (f.source() != window_ground(s, n) || f.target() != window_ground(t, m)) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "map does not run between windows " + std::to_string(n) + " and " +
                           std::to_string(m));
  }
  require_tabulable(f.source());
  bool ok = true;
  for_each_subset(f.source(), [&](ElementSet a) {
    if (ok && !f.image(windowed_closure(s, a, n)).subset_of(windowed_closure(t, f.image(a), m))) {
      ok = false;
    }
  });
  return ok;
}

StrongMap induce_fin_map(const PointedMap& f, const SymbolicMatroid& s, std::size_t n,
                         const SymbolicMatroid& t, std::size_t m) {
  if (!is_strong_on_window(f, s, n, t, m)) {
    throw MatroidError(ErrorKind::kNotStrong, f.to_string() + " is not strong " + s.to_string() +
                                                  " -> " + t.to_string());
  }
  const SymbolicMatroid fin_s = finitize(s);
  const SymbolicMatroid fin_t = finitize(t);
  if (!is_strong_on_window(f, fin_s, n, fin_t, m)) {
    throw MatroidError(ErrorKind::kNotStrong, f.to_string() + " does not pass to " +
                                                  fin_s.to_string() + " -> " + fin_t.to_string());
  }
  return StrongMap::certify(f, restrict_window(fin_s, n), restrict_window(fin_t, m));
}

Cocone Cocone::from_map(const SymbolicMatroid& base, const FiniteMatroid& target,
                        const PointedMap& top_leg, std::size_t n) {
  Cocone out{target, {}};
  for (std::size_t m = 0; m <= n; ++m) {
    out.legs.emplace(m, top_leg.restricted_to(window_ground(base, m)));
  }
  return out;
}

std::string ColimitReport::to_string() const {
  std::ostringstream out;
  out << (passed() ? "colimit map verified" : "colimit check FAILED") << " over windows 0.."
      << (windows == 0 ? 0 : windows - 1) << "; legs strong: " << (legs_strong ? "yes" : "no")
      << ", induced map strong: " << (induced_strong ? "yes" : "no")
      << ", unique: " << (unique ? "yes" : "no");
  if (induced) out << "; induced " << induced->to_string();
  if (!detail.empty()) out << "; " << detail;
  return out.str();
}

ColimitReport colimit_check(const SymbolicMatroid& base, const Cocone& cocone,
                            std::size_t max_window) {
  if (!base.over_omega()) {
    throw MatroidError(ErrorKind::kInvalidDescriptor,
                       "colimit checks need a base over omega, got " + base.to_string());
  }
  const ElementSet target = cocone.target.ground();
  for (std::size_t m = 0; m <= max_window; ++m) {
    const auto it = cocone.legs.find(m);
    if (it == cocone.legs.end()) {
      throw MatroidError(ErrorKind::kIncompatibleCocone, "no leg for window " + std::to_string(m));
    }
    if (it->second.source() != window_ground(base, m) || it->second.target() != target) {
      throw MatroidError(ErrorKind::kGroundMismatch,
                         "leg " + std::to_string(m) + " has the wrong ground sets");
    }
  }
  for (std::size_t lo = 0; lo <= max_window; ++lo) {
    for (std::size_t hi = lo + 1; hi <= max_window; ++hi) {
      const PointedMap& small = cocone.legs.at(lo);
      if (cocone.legs.at(hi).restricted_to(small.source()) != small) {
        throw MatroidError(ErrorKind::kIncompatibleCocone,
                           "leg " + std::to_string(hi) + " restricted to window " +
                               std::to_string(lo) + " differs from leg " + std::to_string(lo));
      }
    }
  }

  ColimitReport report;
  report.windows = max_window + 1;
  for (std::size_t m = 0; m <= max_window && report.legs_strong; ++m) {
    if (!is_strong(cocone.legs.at(m), restrict_window(base, m), cocone.target)) {
      report.legs_strong = false;
      report.detail = "leg " + std::to_string(m) + " is not strong";
    }
  }

  // Union of legs, each element taken from the first window containing it,
  // and again from the last one.
  const ElementSet top = window_ground(base, max_window);
  const PointedMap ascending = PointedMap::from_function(top, target, [&](Element x) {
    return cocone.legs.at(x)(x);
  });
  const PointedMap descending = cocone.legs.at(max_window);
  report.unique = ascending == descending;
  for (Element x : top.without_star()) {
    for (std::size_t m = x; m <= max_window; ++m) {
      if (cocone.legs.at(m)(x) != ascending(x)) report.unique = false;
    }
  }
  report.induced = ascending;
  report.induced_strong =
      is_strong(ascending, restrict_window(finitize(base), max_window), cocone.target);
  if (!report.induced_strong && report.detail.empty()) {
    report.detail = "induced map is not strong out of the finitization";
  }
  return report;
}

std::string WitnessReport::to_string() const {
  std::ostringstream out;
  if (window) {
    out << "factors through window " << *window << "; strong: " << (strong ? "yes" : "no");
  } else {
    out << "no witness up to window " << (escapes.empty() ? 0 : escapes.back().first);
    if (!escapes.empty()) {
      out << " (window j is left by element j+1 for every j)";
    }
  }
  return out.str();
}

WitnessReport finitely_presented_witness(const FiniteMatroid& m, const PointedMap& f,
                                         const SymbolicMatroid& chain, std::size_t bound) {
  if (f.source() != m.ground() || f.target() != window_ground(chain, bound)) {
    throw MatroidError(ErrorKind::kGroundMismatch,
                       "map must run from the matroid into window " + std::to_string(bound));
  }
  WitnessReport report;
  const ElementSet image = f.image();
  const std::size_t j = image.without_star().empty() ? 0 : image.max();
  for (std::size_t w = 0; w < j; ++w) {
    for (Element x : m.ground()) {
      if (!window_ground(chain, w).contains(f(x))) {
        report.escapes.emplace_back(w, x);
        break;
      }
    }
  }
  report.window = j;
  report.strong = is_strong(f.with_target(window_ground(chain, j)), m, restrict_window(chain, j));
  return report;
}

WitnessReport finitely_presented_witness(const WindowedMatroid& m, const SymbolicMatroid& chain,
                                         std::size_t bound) {
  const std::size_t sample_window = std::max(m.window, bound + 1);
  const ElementSet sample = window_ground(m.base, sample_window);
  WitnessReport report;
  for (std::size_t w = 0; w <= bound; ++w) {
    const ElementSet window = window_ground(chain, w);
    std::optional<Element> escape;
    for (Element x : sample) {
      if (!window.contains(x)) {
        escape = x;
        break;
      }
    }
    if (!escape) {
      report.window = w;
      report.strong = is_strong(PointedMap::inclusion(sample, window),
                                restrict_window(m.base, sample_window),
                                restrict_window(chain, w));
      return report;
    }
    report.escapes.emplace_back(w, *escape);
  }
  return report;
}

}  // namespace pmat
