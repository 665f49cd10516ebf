// Copyright 2026 The Legendrian Authors
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

#include "legendrian/front.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <utility>

#include "legendrian/error.hpp"
#include "union_find.hpp"

namespace legendrian {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kInvalidPosition: return "invalid-position";
    case ErrorCode::kUnclosedFront: return "unclosed-front";
    case ErrorCode::kNotAKnot: return "not-a-knot";
    case ErrorCode::kNoPotential: return "no-potential";
    case ErrorCode::kMarkPotential: return "mark-potential";
    case ErrorCode::kNotTwoBridge: return "not-two-bridge";
    case ErrorCode::kMcsInvalid: return "mcs-invalid";
    case ErrorCode::kNoPairing: return "no-pairing";
    case ErrorCode::kPatternMismatch: return "pattern-mismatch";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInternal, std::string("internal: ") + what);
}

std::string to_token(const Event& e) {
  switch (e.kind) {
    case EventKind::kLeftCusp: return "L" + std::to_string(e.pos);
    case EventKind::kRightCusp: return "R" + std::to_string(e.pos);
    case EventKind::kCrossing: return "X" + std::to_string(e.pos);
    case EventKind::kMark:
      return "H" + std::to_string(e.pos) + "," + std::to_string(e.lower);
  }
  return "?";
}

std::vector<int> Trace::slice_potential(std::size_t e) const {
  std::vector<int> out;
  out.reserve(before[e].size());
  for (int s : before[e]) out.push_back(potential[s]);
  return out;
}

namespace {

std::string at_event(std::size_t e, const Event& ev) {
  return "event " + std::to_string(e + 1) + " (" + to_token(ev) + ")";
}

}  // namespace

Trace trace_events(const std::vector<Event>& events) {
  Trace t;
  t.before.reserve(events.size() + 1);
  std::vector<int> slice;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const Event& ev = events[e];
    t.before.push_back(slice);
    const int n = static_cast<int>(slice.size());
    switch (ev.kind) {
      case EventKind::kLeftCusp: {
        if (ev.pos < 1 || ev.pos > n + 1)
          fail(ErrorCode::kInvalidPosition,
               at_event(e, ev) + ": left cusp needs 1 <= i <= " +
                   std::to_string(n + 1));
        const int lo = t.strand_count++;
        const int hi = t.strand_count++;
        slice.insert(slice.begin() + (ev.pos - 1), {lo, hi});
        break;
      }
      case EventKind::kRightCusp:
      case EventKind::kCrossing:
        if (ev.pos < 1 || ev.pos > n - 1)
          fail(ErrorCode::kInvalidPosition,
               at_event(e, ev) + ": needs 1 <= i <= " + std::to_string(n - 1));
        if (ev.kind == EventKind::kCrossing) {
          std::swap(slice[ev.pos - 1], slice[ev.pos]);
        } else {
          slice.erase(slice.begin() + (ev.pos - 1),
                      slice.begin() + (ev.pos + 1));
        }
        break;
      case EventKind::kMark:
        if (ev.lower < 1 || ev.pos <= ev.lower || ev.pos > n)
          fail(ErrorCode::kInvalidPosition,
               at_event(e, ev) + ": mark needs 1 <= l < k <= " +
                   std::to_string(n));
        break;
    }
  }
  t.before.push_back(slice);
  if (!slice.empty())
    fail(ErrorCode::kUnclosedFront,
         "front ends with " + std::to_string(slice.size()) + " open strands");
  return t;
}

MarkedFront::MarkedFront(std::vector<Event> events)
    : events_(std::move(events)), trace_(trace_events(events_)) {
  // Each strand runs from a left cusp to a right cusp; cusps tie the two
  // strands they touch together with upper = lower + 1.
  const int n = trace_.strand_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, mu delta)
  detail::UnionFind uf(n);
  for (std::size_t e = 0; e < events_.size(); ++e) {
    const Event& ev = events_[e];
    int lo = -1, hi = -1;
    if (ev.kind == EventKind::kLeftCusp) {
      lo = trace_.before[e + 1][ev.pos - 1];
      hi = trace_.before[e + 1][ev.pos];
    } else if (ev.kind == EventKind::kRightCusp) {
      lo = trace_.before[e][ev.pos - 1];
      hi = trace_.before[e][ev.pos];
    } else {
      continue;
    }
    uf.unite(lo, hi);
    adj[lo].push_back({hi, 1});
    adj[hi].push_back({lo, -1});
  }
  trace_.components = uf.components();
  if (trace_.components != 1)
    fail(ErrorCode::kNotAKnot, "front traces " +
                                   std::to_string(trace_.components) +
                                   " components; only knots are supported");

  std::vector<std::optional<int>> mu(n);
  if (n > 0) {
    mu[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (auto [t, d] : adj[s]) {
        if (!mu[t]) {
          mu[t] = *mu[s] + d;
          q.push(t);
        } else if (*mu[t] != *mu[s] + d) {
          fail(ErrorCode::kNoPotential,
               "cusp constraints admit no Maslov potential (nonzero rotation "
               "number)");
        }
      }
    }
  }
  trace_.potential.resize(n);
  int lowest = 0;
  for (int s = 0; s < n; ++s) lowest = std::min(lowest, *mu[s]);
  for (int s = 0; s < n; ++s) trace_.potential[s] = *mu[s] - lowest;

  for (std::size_t e = 0; e < events_.size(); ++e) {
    const Event& ev = events_[e];
    if (!ev.is_mark()) continue;
    const auto& sl = trace_.before[e];
    if (trace_.potential[sl[ev.pos - 1]] != trace_.potential[sl[ev.lower - 1]])
      fail(ErrorCode::kMarkPotential,
           at_event(e, ev) + ": mark joins strands of different potential");
  }
}

MarkedFront MarkedFront::underlying() const {
  std::vector<Event> out;
  for (const Event& e : events_)
    if (!e.is_mark()) out.push_back(e);
  return MarkedFront(std::move(out));
}

bool MarkedFront::has_marks() const { return mark_count() > 0; }

int MarkedFront::mark_count() const {
  return static_cast<int>(std::count_if(
      events_.begin(), events_.end(), [](const Event& e) { return e.is_mark(); }));
}

int MarkedFront::left_cusp_count() const {
  return static_cast<int>(
      std::count_if(events_.begin(), events_.end(), [](const Event& e) {
        return e.kind == EventKind::kLeftCusp;
      }));
}

std::string MarkedFront::serialize() const {
  std::string out;
  for (std::size_t e = 0; e < events_.size(); ++e) {
    if (e) out += ' ';
    out += to_token(events_[e]);
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  if (s.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Event> parse_token(std::string_view tok) {
  if (tok.size() < 2) return std::nullopt;
  const std::string_view rest = tok.substr(1);
  switch (tok[0]) {
    case 'L':
    case 'R':
    case 'X': {
      auto v = parse_int(rest);
      if (!v) return std::nullopt;
      if (tok[0] == 'L') return Event::left_cusp(*v);
      if (tok[0] == 'R') return Event::right_cusp(*v);
      return Event::crossing(*v);
    }
    case 'H': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) return std::nullopt;
      auto k = parse_int(rest.substr(0, comma));
      auto l = parse_int(rest.substr(comma + 1));
      if (!k || !l) return std::nullopt;
      return Event::mark(*k, *l);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

MarkedFront parse_front(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::size_t i = 0;
  std::size_t line_start = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    tokens.push_back({std::string(text.substr(start, i - start)), line,
                      static_cast<int>(start - line_start) + 1});
  }

  std::vector<Event> events;
  events.reserve(tokens.size());
  for (const Token& t : tokens) {
    auto ev = parse_token(t.text);
    if (!ev)
      fail(ErrorCode::kSyntax, std::to_string(t.line) + ":" +
                                   std::to_string(t.column) +
                                   ": bad token '" + t.text + "'");
    events.push_back(*ev);
  }
  try {
    return MarkedFront(std::move(events));
  } catch (const Error& err) {
    // Point at the offending token when the message names one.
    const std::string msg = err.what();
    const std::string key = "event ";
    if (msg.rfind(key, 0) == 0) {
      std::size_t idx = 0;
      std::from_chars(msg.data() + key.size(), msg.data() + msg.size(), idx);
      if (idx >= 1 && idx <= tokens.size()) {
        const Token& t = tokens[idx - 1];
        throw Error(err.code(), std::to_string(t.line) + ":" +
                                    std::to_string(t.column) + ": " + msg);
      }
    }
    throw;
  }
}

bool is_two_bridge(const FrontDiagram& front) {
  return front.left_cusp_count() == 2;
}

std::vector<std::size_t> generator_events(const FrontDiagram& front) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < front.size(); ++e) {
    const EventKind k = front[e].kind;
    if (k == EventKind::kCrossing || k == EventKind::kRightCusp)
      out.push_back(e);
  }
  return out;
}

}  // namespace legendrian
