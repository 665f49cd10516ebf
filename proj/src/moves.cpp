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

#include "legendrian/moves.hpp"

#include <algorithm>
#include <sstream>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

using Events = std::vector<Event>;

// Replace events [at, at + old_len) by `repl`.
struct Rewrite {
  std::size_t at = 0;
  std::size_t old_len = 0;
  Events repl;
};

[[noreturn]] void mismatch(const MoveInstance& m, const std::string& why) {
  fail(ErrorCode::kPatternMismatch, "move " + std::to_string(m.id) +
                                        " at event " +
                                        std::to_string(m.at + 1) + ": " + why);
}

bool is_mark_at(const Events& ev, std::size_t j) {
  return j < ev.size() && ev[j].is_mark();
}

bool is_kind_at(const Events& ev, std::size_t j, EventKind kind) {
  return j < ev.size() && ev[j].kind == kind;
}

void want_params(const MoveInstance& m, std::size_t count) {
  if (m.params.size() != count)
    mismatch(m, "expected " + std::to_string(count) + " parameters");
}

bool touches(const Event& mark, int i) {
  return mark.pos == i || mark.pos == i + 1 || mark.lower == i ||
         mark.lower == i + 1;
}

int swap_label(int x, int i) {
  if (x == i) return i + 1;
  if (x == i + 1) return i;
  return x;
}

Rewrite move_pair(const Mcs& mcs, const MoveInstance& m) {
  want_params(m, 2);
  const Events& ev = mcs.front.events();
  const Event mk = Event::mark(m.params[0], m.params[1]);
  if (is_mark_at(ev, m.at + 1) && ev[m.at] == mk && ev[m.at + 1] == mk)
    return {m.at, 2, {}};
  if (m.at == 0 || m.at >= ev.size()) mismatch(m, "no strands at this gap");
  if (mk.pos <= mk.lower) mismatch(m, "mark must read k > l");
  return {m.at, 0, {mk, mk}};
}

Rewrite move_commute(const Mcs& mcs, const MoveInstance& m) {
  const Events& ev = mcs.front.events();
  if (!is_mark_at(ev, m.at) || !is_mark_at(ev, m.at + 1))
    mismatch(m, "needs two adjacent marks");
  const int c = commute_class(ev[m.at], ev[m.at + 1]);
  if (c != m.id) mismatch(m, "marks do not form this commutation");
  return {m.at, 2, {ev[m.at + 1], ev[m.at]}};
}

Rewrite move_triangle(const Mcs& mcs, const MoveInstance& m) {
  const Events& ev = mcs.front.events();
  if (!is_mark_at(ev, m.at) || !is_mark_at(ev, m.at + 1))
    mismatch(m, "needs adjacent marks");
  const Event& a = ev[m.at];
  const Event& b = ev[m.at + 1];
  if (is_mark_at(ev, m.at + 2)) {
    const Event& c = ev[m.at + 2];
    // (y,z)(x,z)(x,y) -> (x,y)(y,z)
    if (b.pos == c.pos && a.lower == b.lower && a.pos == c.lower)
      return {m.at, 3, {c, a}};
    // (x,y)(x,z)(y,z) -> (y,z)(x,y)
    if (a.pos == b.pos && a.lower == c.pos && b.lower == c.lower)
      return {m.at, 3, {c, a}};
  }
  // (x,y)(y,z) -> (y,z)(x,z)(x,y)
  if (a.lower == b.pos) return {m.at, 2, {b, Event::mark(a.pos, b.lower), a}};
  // (y,z)(x,y) -> (x,y)(x,z)(y,z)
  if (a.pos == b.lower) return {m.at, 2, {b, Event::mark(b.pos, a.lower), a}};
  mismatch(m, "marks do not share a middle strand");
}

int crossing_class(const Event& left_label, int i) {
  const int k = left_label.pos, l = left_label.lower;
  if (l == i || l == i + 1) return 8;
  if (k == i || k == i + 1) return 9;
  if (l < i && k > i + 1) return 10;
  return 7;
}

Rewrite move_crossing(const Mcs& mcs, const MoveInstance& m) {
  const Events& ev = mcs.front.events();
  Event mark, x;
  bool mark_first = false;
  if (is_mark_at(ev, m.at) && is_kind_at(ev, m.at + 1, EventKind::kCrossing)) {
    mark = ev[m.at];
    x = ev[m.at + 1];
    mark_first = true;
  } else if (is_kind_at(ev, m.at, EventKind::kCrossing) &&
             is_mark_at(ev, m.at + 1)) {
    x = ev[m.at];
    mark = ev[m.at + 1];
  } else {
    mismatch(m, "needs a mark next to a crossing");
  }
  const int i = x.pos;
  if (std::min(mark.pos, mark.lower) == i && std::max(mark.pos, mark.lower) ==
                                                 i + 1)
    mismatch(m, "mark joins the crossing strands");
  const Event moved =
      Event::mark(swap_label(mark.pos, i), swap_label(mark.lower, i));
  const Event left_label = mark_first ? mark : moved;
  if (crossing_class(left_label, i) != m.id)
    mismatch(m, "mark does not sit as this move requires");
  if (mark_first) return {m.at, 2, {x, moved}};
  return {m.at, 2, {moved, x}};
}

Rewrite move_cusp(const Mcs& mcs, const MoveInstance& m) {
  const Events& ev = mcs.front.events();
  const bool mark_first = is_mark_at(ev, m.at);
  const std::size_t c_at = mark_first ? m.at + 1 : m.at;
  const std::size_t mk_at = mark_first ? m.at : m.at + 1;
  if (!is_mark_at(ev, mk_at) || c_at >= ev.size() || ev[c_at].is_mark() ||
      ev[c_at].kind == EventKind::kCrossing)
    mismatch(m, "needs a mark next to a cusp");
  const Event cusp = ev[c_at];
  const int i = cusp.pos;
  const bool left = cusp.kind == EventKind::kLeftCusp;
  // The slice holding the cusp strands is right of a left cusp and left of
  // a right cusp; `wide` is the mark's label there.
  const bool mark_in_wide = left ? !mark_first : mark_first;
  const Event& mk = ev[mk_at];
  auto widen = [i](int x) { return x >= i ? x + 2 : x; };
  auto narrow = [i](int x) { return x > i + 1 ? x - 2 : x; };
  Event wide = mk;
  if (mark_in_wide) {
    if (touches(mk, i)) mismatch(m, "mark touches the cusp strands");
  } else {
    wide = Event::mark(widen(mk.pos), widen(mk.lower));
  }
  const Event narrow_mark = Event::mark(narrow(wide.pos), narrow(wide.lower));
  int cls;
  bool implicit_changes = false;
  if (!left) {
    // Either order starts from the complex left of the window.
    const ChainComplex& before = mcs.complexes[m.at];
    const ChainComplex slid = handleslide_map(before, wide.pos, wide.lower);
    implicit_changes = !(death_product(before, i) == death_product(slid, i));
  }
  if (implicit_changes)
    cls = 14;
  else if (wide.lower < i && wide.pos > i + 1)
    cls = 13;
  else if (wide.pos < i)
    cls = 11;
  else
    cls = 12;
  if (cls != m.id) mismatch(m, "mark does not sit as this move requires");
  if (mark_first)
    return {m.at, 2, {cusp, left ? wide : narrow_mark}};
  return {m.at, 2, {left ? narrow_mark : wide, cusp}};
}

Rewrite move_absorb(const Mcs& mcs, const MoveInstance& m) {
  want_params(m, 1);
  const Events& ev = mcs.front.events();
  const int p = m.params[0];
  auto expected = [&](int i) {
    return m.id == 15 ? Event::mark(p, i + 1) : Event::mark(i, p);
  };
  auto in_range = [&](int i) { return m.id == 15 ? p > i + 1 : (p < i && p >= 1); };
  if (is_mark_at(ev, m.at) &&
      is_kind_at(ev, m.at + 1, EventKind::kRightCusp)) {
    const int i = ev[m.at + 1].pos;
    if (ev[m.at] != expected(i) || !in_range(i))
      mismatch(m, "mark is not the one named");
    return {m.at, 2, {ev[m.at + 1]}};
  }
  if (is_kind_at(ev, m.at, EventKind::kRightCusp)) {
    const int i = ev[m.at].pos;
    if (!in_range(i)) mismatch(m, "mark endpoint out of range");
    return {m.at, 1, {expected(i), ev[m.at]}};
  }
  mismatch(m, "needs a right cusp");
}

Rewrite move_explosion(const Mcs& mcs, const MoveInstance& m) {
  want_params(m, 2);
  const Events& ev = mcs.front.events();
  if (m.at == 0 || m.at >= ev.size()) mismatch(m, "no strands at this gap");
  const ChainComplex& c = mcs.complexes[m.at];
  const int l = m.params[0], k = m.params[1];
  if (!(1 <= l && l < k && k <= c.n())) mismatch(m, "pair out of range");
  if (c.deg(l) != c.deg(k) + 1)
    fail(ErrorCode::kPrecondition,
         "move 17 at event " + std::to_string(m.at + 1) + ": |y" +
             std::to_string(l) + "| != |y" + std::to_string(k) + "| + 1");
  Events block;
  for (auto [a, b] : explosion_marks(c, l, k)) block.push_back(Event::mark(a, b));
  if (block.empty()) mismatch(m, "the product is empty");
  if (m.at + block.size() <= ev.size() &&
      std::equal(block.begin(), block.end(), ev.begin() + m.at))
    return {m.at, block.size(), {}};
  return {m.at, 0, block};
}

Rewrite rewrite_for(const Mcs& mcs, const MoveInstance& m) {
  if (m.at > mcs.front.size()) mismatch(m, "location past the end");
  switch (m.id) {
    case 1: return move_pair(mcs, m);
    case 2: case 3: case 4: case 5: return move_commute(mcs, m);
    case 6: return move_triangle(mcs, m);
    case 7: case 8: case 9: case 10: return move_crossing(mcs, m);
    case 11: case 12: case 13: case 14: return move_cusp(mcs, m);
    case 15: case 16: return move_absorb(mcs, m);
    case 17: return move_explosion(mcs, m);
    default: break;
  }
  mismatch(m, "unknown move id");
}

MarkedFront rewritten_front(const Mcs& mcs, const MoveInstance& m,
                            const Rewrite& rw) {
  const Events& ev = mcs.front.events();
  Events out(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(rw.at));
  out.insert(out.end(), rw.repl.begin(), rw.repl.end());
  out.insert(out.end(),
             ev.begin() + static_cast<std::ptrdiff_t>(rw.at + rw.old_len),
             ev.end());
  try {
    return MarkedFront(std::move(out));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInternal) throw;
    mismatch(m, err.what());
  }
}

}  // namespace

bool sweep_less(const Event& a, const Event& b) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return a.lower < b.lower;
}

int commute_class(const Event& a, const Event& b) {
  if (!a.is_mark() || !b.is_mark() || a == b) return 0;
  if (a.pos == b.lower || b.pos == a.lower) return 0;
  if (a.pos == b.pos) return 4;
  if (a.lower == b.lower) return 5;
  if (a.lower > b.pos || b.lower > a.pos) return 2;
  return 3;
}

std::vector<std::pair<int, int>> explosion_marks(const ChainComplex& c, int l,
                                                 int k) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < l; ++v)
    if (c.d.at(l, v)) out.emplace_back(k, v);
  for (int u = k + 1; u <= c.n(); ++u)
    if (c.d.at(u, k)) out.emplace_back(u, l);
  return out;
}

Mcs apply_move(const Mcs& mcs, const MoveInstance& m) {
  const Rewrite rw = rewrite_for(mcs, m);
  MarkedFront front = rewritten_front(mcs, m, rw);
  Mcs out;
  try {
    out = reconstruct(front);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kMcsInvalid) throw;
    fail(ErrorCode::kInternal, "move " + std::to_string(m.id) +
                                   " produced an invalid MCS: " + err.what());
  }
  // Locality: complexes left of the window and right of it are unchanged.
  for (std::size_t j = 0; j <= rw.at; ++j)
    ensure(out.complexes[j] == mcs.complexes[j], "move changed a complex");
  for (std::size_t j = rw.at + rw.old_len; j < mcs.complexes.size(); ++j)
    ensure(out.complexes[j - rw.old_len + rw.repl.size()] == mcs.complexes[j],
           "move changed a complex");
  return out;
}

Mcs replay(const Mcs& mcs, const std::vector<MoveInstance>& journal) {
  Mcs cur = mcs;
  for (const MoveInstance& m : journal) cur = apply_move(cur, m);
  return cur;
}

bool move_matches(const Mcs& mcs, const MoveInstance& m) {
  try {
    rewritten_front(mcs, m, rewrite_for(mcs, m));
    return true;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInternal) throw;
    return false;
  }
}

std::vector<MoveInstance> applicable_moves(const Mcs& mcs) {
  const MarkedFront& f = mcs.front;
  const Trace& tr = f.trace();
  std::vector<MoveInstance> cand;
  for (std::size_t at = 0; at < f.size(); ++at) {
    if (at > 0) {
      const auto mu = tr.slice_potential(at);
      const int n = static_cast<int>(mu.size());
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l < k; ++l) {
          if (mu[k - 1] == mu[l - 1]) cand.push_back({1, at, {k, l}});
          if (mu[l - 1] == mu[k - 1] + 1) cand.push_back({17, at, {l, k}});
        }
    }
    for (int id = 2; id <= 14; ++id) cand.push_back({id, at, {}});
    if (f[at].kind == EventKind::kRightCusp ||
        (at + 1 < f.size() && f[at + 1].kind == EventKind::kRightCusp)) {
      const int n = tr.width(at);
      for (int p = 1; p <= n + 2; ++p) {
        cand.push_back({15, at, {p}});
        cand.push_back({16, at, {p}});
      }
    }
  }
  std::vector<MoveInstance> out;
  for (const MoveInstance& m : cand)
    if (move_matches(mcs, m)) out.push_back(m);
  return out;
}

std::string journal_line(const MoveInstance& m) {
  std::string s = "#" + std::to_string(m.id) + " @" + std::to_string(m.at + 1);
  for (int p : m.params) s += " " + std::to_string(p);
  return s;
}

MoveInstance parse_journal_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string id, at;
  MoveInstance m;
  auto bad = [&] {
    fail(ErrorCode::kSyntax, "bad journal line '" + std::string(line) + "'");
  };
  if (!(in >> id >> at) || id.size() < 2 || id[0] != '#' || at.size() < 2 ||
      at[0] != '@')
    bad();
  try {
    std::size_t used = 0;
    m.id = std::stoi(id.substr(1), &used);
    if (used != id.size() - 1) bad();
    const long e = std::stol(at.substr(1), &used);
    if (used != at.size() - 1 || e < 1) bad();
    m.at = static_cast<std::size_t>(e - 1);
  } catch (const std::logic_error&) {
    bad();
  }
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      m.params.push_back(std::stoi(tok, &used));
      if (used != tok.size()) bad();
    } catch (const std::logic_error&) {
      bad();
    }
  }
  if (m.id < 1 || m.id > 17) bad();
  return m;
}

std::vector<MoveInstance> parse_journal(std::string_view text) {
  std::vector<MoveInstance> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0)
      continue;
    out.push_back(parse_journal_line(line));
  }
  return out;
}

std::string format_journal(const std::vector<MoveInstance>& journal) {
  std::string s;
  for (const MoveInstance& m : journal) s += journal_line(m) + "\n";
  return s;
}

}  // namespace legendrian
