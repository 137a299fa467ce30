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

#include "pmat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace pmat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& origin, std::size_t line,
                       const std::string& what) {
  throw MatroidError(kind, origin + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

bool valid_name(const std::string& name) {
  return !name.empty() && name != "*" &&
         name.find_first_of(",#*:") == std::string::npos &&
         name.find("->") == std::string::npos;
}

}  // namespace

NamedMatroid NamedMatroid::numbered(FiniteMatroid m) {
  std::vector<std::string> names(m.ground().max() + 1);
  names[0] = "*";
  for (Element e : m.ground().without_star()) names[e] = std::to_string(e);
  return {std::move(m), std::move(names)};
}

NamedMatroid NamedMatroid::with_matroid(FiniteMatroid m) const {
  return {std::move(m), names};
}

const std::string& NamedMatroid::name_of(Element e) const {
  if (e >= names.size() || names[e].empty()) {
    throw MatroidError(ErrorKind::kUnknownElement, "no name for element " + std::to_string(e));
  }
  return names[e];
}

ElementSet NamedMatroid::parse_set(std::string_view csv) const {
  ElementSet out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string token(trim(csv.substr(start, end - start)));
    start = end + 1;
    if (token.empty()) continue;
    bool found = false;
    for (Element e : matroid.ground()) {
      if (name_of(e) == token) {
        out = out.with(e);
        found = true;
      }
    }
    if (!found) throw MatroidError(ErrorKind::kUnknownElement, "unknown element '" + token + "'");
  }
  return out;
}

std::string NamedMatroid::format_set(ElementSet s) const {
  std::vector<std::string> parts;
  for (Element e : s.without_star()) parts.push_back(name_of(e));
  std::sort(parts.begin(), parts.end());
  if (s.contains_star()) parts.insert(parts.begin(), "*");
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

NamedMatroid parse_matroid(std::string_view text, const std::string& origin) {
  std::vector<std::string> names{"*"};
  std::map<std::string, Element> ids{{"*", kStar}};
  bool have_ground = false;
  CircuitSet circuits;
  std::vector<std::size_t> circuit_lines;

  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = strip_comment(lines[n]);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorKind::kParseError, origin, line_no, "expected 'ground:' or 'circuit:'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::vector<std::string> words = split_words(line.substr(colon + 1));
    if (key == "ground") {
      if (have_ground) fail(ErrorKind::kParseError, origin, line_no, "second ground line");
      have_ground = true;
      for (const std::string& w : words) {
        if (!valid_name(w)) fail(ErrorKind::kParseError, origin, line_no, "bad name '" + w + "'");
        if (ids.count(w) != 0) {
          fail(ErrorKind::kParseError, origin, line_no, "duplicate name '" + w + "'");
        }
        if (names.size() > kMaxElementId) {
          fail(ErrorKind::kParseError, origin, line_no,
               "more than " + std::to_string(kMaxElementId) + " elements");
        }
        ids.emplace(w, static_cast<Element>(names.size()));
        names.push_back(w);
      }
    } else if (key == "circuit") {
      if (!have_ground) fail(ErrorKind::kParseError, origin, line_no, "circuit before ground");
      if (words.empty()) fail(ErrorKind::kParseError, origin, line_no, "empty circuit");
      ElementSet c;
      for (const std::string& w : words) {
        const auto it = ids.find(w);
        if (it == ids.end()) {
          fail(ErrorKind::kUnknownElement, origin, line_no, "unknown element '" + w + "'");
        }
        c = c.with(it->second);
      }
      for (std::size_t k = 0; k < circuits.size(); ++k) {
        if (c.proper_subset_of(circuits[k]) || circuits[k].proper_subset_of(c)) {
          fail(ErrorKind::kNotAntichain, origin, line_no,
               "circuit is comparable with the one on line " + std::to_string(circuit_lines[k]));
        }
      }
      if (c.contains_star() && c != ElementSet::star()) {
        fail(ErrorKind::kNotAntichain, origin, line_no, "circuit contains the loop circuit {*}");
      }
      circuits.push_back(c);
      circuit_lines.push_back(line_no);
    } else {
      fail(ErrorKind::kParseError, origin, line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_ground) {
    throw MatroidError(ErrorKind::kParseError, origin + ": missing ground line");
  }
  const ElementSet ground = ElementSet::range(1, static_cast<Element>(names.size() - 1)).with_star();
  try {
    return {make_matroid(ground, circuits), std::move(names)};
  } catch (const MatroidError& e) {
    throw MatroidError(e.kind(), origin + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatroidError(ErrorKind::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

NamedMatroid read_matroid_file(const std::string& path) {
  return parse_matroid(read_text_file(path), path);
}

std::string emit_matroid(const NamedMatroid& m) {
  std::vector<std::string> ground;
  for (Element e : m.matroid.ground().without_star()) ground.push_back(m.name_of(e));
  std::sort(ground.begin(), ground.end());
  std::vector<std::vector<std::string>> circuits;
  for (ElementSet c : m.matroid.circuits()) {
    if (c == ElementSet::star()) continue;
    std::vector<std::string> words;
    for (Element e : c) words.push_back(m.name_of(e));
    std::sort(words.begin(), words.end());
    circuits.push_back(std::move(words));
  }
  std::sort(circuits.begin(), circuits.end());
  std::ostringstream out;
  out << "ground:";
  for (const std::string& g : ground) out << ' ' << g;
  out << '\n';
  for (const auto& c : circuits) {
    out << "circuit:";
    for (const std::string& w : c) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

PointedMap parse_map(std::string_view text, const NamedMatroid& source,
                     const NamedMatroid& target, const std::string& origin) {
  auto lookup = [](const NamedMatroid& side, const std::string& name) -> std::optional<Element> {
    for (Element e : side.matroid.ground()) {
      if (side.name_of(e) == name) return e;
    }
    return std::nullopt;
  };
  std::map<Element, Element> assigned;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const std::string_view line = strip_comment(lines[n]);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      fail(ErrorKind::kParseError, origin, line_no, "expected 'a -> b'");
    }
    const std::string from(trim(line.substr(0, arrow)));
    const std::string to(trim(line.substr(arrow + 2)));
    const auto x = lookup(source, from);
    const auto y = lookup(target, to);
    if (!x) fail(ErrorKind::kParseError, origin, line_no, "unknown source element '" + from + "'");
    if (!y) fail(ErrorKind::kParseError, origin, line_no, "unknown target element '" + to + "'");
    if (*x == kStar && *y != kStar) fail(ErrorKind::kParseError, origin, line_no, "* must map to *");
    if (!assigned.emplace(*x, *y).second) {
      fail(ErrorKind::kParseError, origin, line_no, "'" + from + "' mapped twice");
    }
  }
  std::vector<std::pair<Element, Element>> assignment;
  for (Element e : source.matroid.ground().without_star()) {
    if (const auto it = assigned.find(e); it != assigned.end()) {
      assignment.emplace_back(e, it->second);
      continue;
    }
    const auto same = lookup(target, source.name_of(e));
    if (!same) {
      throw MatroidError(ErrorKind::kParseError,
                         origin + ": no image for '" + source.name_of(e) + "'");
    }
    assignment.emplace_back(e, *same);
  }
  return PointedMap(source.matroid.ground(), target.matroid.ground(), assignment);
}

PointedMap read_map_file(const std::string& path, const NamedMatroid& source,
                         const NamedMatroid& target) {
  return parse_map(read_text_file(path), source, target, path);
}

std::string emit_map(const PointedMap& f, const NamedMatroid& source,
                     const NamedMatroid& target) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (Element e : f.source().without_star()) {
    rows.emplace_back(source.name_of(e), target.name_of(f(e)));
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [a, b] : rows) out += a + " -> " + b + '\n';
  return out;
}

namespace {

std::size_t parse_count(std::string_view token, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw MatroidError(ErrorKind::kParseError,
                       "bad number '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

SymbolicGround parse_ground(std::string_view token, std::string_view whole) {
  if (token == "omega") return Omega{};
  return FiniteGround{parse_count(token, whole)};
}

}  // namespace

SymbolicMatroid parse_descriptor(std::string_view text) {
  const std::string_view whole = trim(text);
  if (whole.rfind("file:", 0) == 0) {
    return SymbolicMatroid(Explicit{read_matroid_file(std::string(whole.substr(5))).matroid});
  }
  const auto open = whole.find('(');
  if (open == std::string_view::npos || whole.back() != ')') {
    throw MatroidError(ErrorKind::kParseError, "bad descriptor '" + std::string(whole) + "'");
  }
  const std::string_view head = trim(whole.substr(0, open));
  const std::string_view body = whole.substr(open + 1, whole.size() - open - 2);
  std::vector<std::string_view> args;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find(',', start);
    if (end == std::string_view::npos) end = body.size();
    args.push_back(trim(body.substr(start, end - start)));
    start = end + 1;
  }
  if (head == "free" && args.size() == 1) {
    return SymbolicMatroid(Free{parse_ground(args[0], whole)});
  }
  if (head == "uniform" && args.size() == 2) {
    return SymbolicMatroid(Uniform{parse_count(args[0], whole), parse_ground(args[1], whole)});
  }
  if (head == "couniform" && args.size() == 2) {
    return SymbolicMatroid(CoUniform{parse_count(args[0], whole), parse_ground(args[1], whole)});
  }
  throw MatroidError(ErrorKind::kParseError, "bad descriptor '" + std::string(whole) + "'");
}

}  // namespace pmat
