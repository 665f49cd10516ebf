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

#include "legendrian/normal_forms.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

int first_match(const Mcs& mcs, std::size_t at, std::initializer_list<int> ids) {
  for (int id : ids)
    if (move_matches(mcs, {id, at, {}})) return id;
  ensure(false, "no move of the expected family matches");
  return 0;
}

// Marks placed after a crossing at i whose left complex is simple with
// pairing `tau`, once the mark (i+1, i) has been put just left of it.
struct CrossingConfig {
  bool is_switch = false;
  std::vector<Event> after;
};

CrossingConfig crossing_config(const Pairing& tau, int i) {
  const int ta = tau[i], tb = tau[i + 1];
  ensure(ta != 0 && tb != 0 && ta != i + 1, "crossing strands unpaired");
  const bool a_source = ta < i, b_source = tb < i + 1;
  const Event h = Event::mark(i + 1, i);
  if (a_source && !b_source) return {true, {h}};
  if (!a_source && b_source) return {false, {}};
  const Event companion = Event::mark(std::max(ta, tb), std::min(ta, tb));
  if (ta > tb) return {true, {h, companion}};
  return {false, {companion}};
}

bool has_mark(const std::vector<std::pair<int, int>>& v, int k, int l) {
  return std::find(v.begin(), v.end(), std::make_pair(k, l)) != v.end();
}

// Maps each crossing / right cusp event of the marked front to the
// generator id of the same singularity in the unmarked front.
std::map<std::size_t, int> generator_ids(const MarkedFront& marked,
                                         const ResolvedDGA& dga) {
  std::map<std::size_t, std::size_t> plain_index;
  std::size_t p = 0;
  for (std::size_t e = 0; e < marked.size(); ++e)
    if (!marked[e].is_mark()) plain_index[e] = p++;
  std::map<std::size_t, int> by_plain;
  for (const Generator& g : dga.generators) by_plain[g.event] = g.id;
  std::map<std::size_t, int> out;
  for (auto [e, pe] : plain_index) {
    auto it = by_plain.find(pe);
    if (it != by_plain.end()) out[e] = it->second;
  }
  return out;
}

enum class Mode { kSrBar, kAForm };

void sweep(Sweeper& s, Mode mode) {
  const auto size = [&] { return s.mcs().front.size(); };
  s.start(0);
  while (s.end() < size()) {
    const Event ev = s.mcs().front[s.end()];
    switch (ev.kind) {
      case EventKind::kMark:
        s.absorb_right();
        break;
      case EventKind::kLeftCusp:
        s.pass_left_cusp();
        break;
      case EventKind::kRightCusp:
        s.pass_right_cusp();
        break;
      case EventKind::kCrossing: {
        const int i = ev.pos;
        if (!has_mark(s.marks(), i + 1, i)) {
          s.pass_crossing();
          break;
        }
        s.extract_left(i + 1, i);
        s.pass_crossing();
        if (mode == Mode::kAForm) break;
        // h X sits at [begin-2, begin); the complex left of h is simple.
        const ChainComplex& left = s.mcs().complexes[s.begin() - 2];
        const CrossingConfig cfg = crossing_config(pairing_of(left), i);
        const std::size_t at = s.begin();
        for (std::size_t w = 0; w < cfg.after.size(); ++w)
          s.insert_pair(at + w, cfg.after[w].pos, cfg.after[w].lower);
        // The inverses of the inserted marks join V.
        s.reset_begin(at + cfg.after.size());
        break;
      }
    }
    if (mode == Mode::kSrBar)
      ensure(is_simple(s.mcs().complexes[s.begin()]),
             "complex left of V is not simple");
  }
  ensure(s.begin() == s.end(), "marks left over at the end of the front");
}

}  // namespace

std::vector<std::pair<int, int>> Sweeper::marks() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t j = begin_; j < end_; ++j)
    out.emplace_back(ev(j).pos, ev(j).lower);
  return out;
}

Mat2 Sweeper::product() const {
  const int n = mcs_.front.trace().width(begin_);
  Mat2 p = Mat2::identity(n);
  for (auto [k, l] : marks()) p = p * Mat2::elementary(n, k, l);
  return p;
}

void Sweeper::apply(const MoveInstance& m) {
  MarkedFront prior = mcs_.front;
  mcs_ = apply_move(mcs_, m);
  if (!journal_.empty() && journal_.back() == m && before_.back() == mcs_.front) {
    journal_.pop_back();
    before_.pop_back();
    return;
  }
  journal_.push_back(m);
  before_.push_back(std::move(prior));
}

void Sweeper::start(std::size_t at) { begin_ = end_ = at; }

void Sweeper::reset_begin(std::size_t begin) {
  ensure(begin <= end_, "V bounds");
  begin_ = begin;
  sort();
}

void Sweeper::insert_pair(std::size_t at, int k, int l) {
  // Move 1 removes a pair it finds at its location. Inserting after a run
  // of copies of the mark gives the same word.
  const Event x = Event::mark(k, l);
  std::size_t where = at;
  while (where < mcs_.front.size() && ev(where) == x) ++where;
  apply({1, where, {k, l}});
  if (at <= begin_) begin_ += 2;
  if (at <= end_) end_ += 2;
}

void Sweeper::commute_or_triangle(std::size_t at) {
  const Event a = ev(at), b = ev(at + 1);
  if (a == b) {
    apply({1, at, {a.pos, a.lower}});
    end_ -= 2;
  } else if (const int c = commute_class(a, b)) {
    apply({c, at, {}});
  } else {
    apply({6, at, {}});
    ++end_;
  }
}

void Sweeper::sort() {
  for (int guard = 0;; ++guard) {
    ensure(guard < 100000, "sweep sort does not terminate");
    std::size_t j = begin_;
    while (j + 1 < end_ && sweep_less(ev(j), ev(j + 1))) ++j;
    if (j + 1 >= end_) return;
    commute_or_triangle(j);
  }
}

void Sweeper::absorb_right() {
  ensure(end_ < mcs_.front.size() && ev(end_).is_mark(), "no mark to absorb");
  ++end_;
  sort();
}

void Sweeper::extract_left(int k, int l) {
  std::size_t j = begin_;
  while (j < end_ && !(ev(j) == Event::mark(k, l))) ++j;
  ensure(j < end_, "mark to extract is not in V");
  for (; j > begin_; --j) {
    const Event x = ev(j - 1);
    const Event h = ev(j);
    ensure(!(x == h), "V holds a repeated mark");
    if (const int c = commute_class(x, h)) {
      apply({c, j - 1, {}});
    } else {
      // Either (a,k)(k,l) or (l,c)(k,l); move 6 puts h first and leaves a
      // byproduct between it and x.
      apply({6, j - 1, {}});
      ++end_;
    }
  }
  ++begin_;
  sort();
}

void Sweeper::pass_crossing() {
  ensure(end_ < mcs_.front.size() &&
             ev(end_).kind == EventKind::kCrossing,
         "no crossing right of V");
  const int i = ev(end_).pos;
  ensure(!has_mark(marks(), i + 1, i), "v_{i+1,i} = 1 at a crossing");
  for (std::size_t j = end_; j > begin_; --j)
    apply({first_match(mcs_, j - 1, {7, 8, 9, 10}), j - 1, {}});
  ++begin_;
  ++end_;
  sort();
}

void Sweeper::pass_left_cusp() {
  ensure(end_ < mcs_.front.size() && ev(end_).kind == EventKind::kLeftCusp,
         "no left cusp right of V");
  for (std::size_t j = end_; j > begin_; --j)
    apply({first_match(mcs_, j - 1, {11, 12, 13}), j - 1, {}});
  ++begin_;
  ++end_;
}

void Sweeper::pass_right_cusp() {
  ensure(end_ < mcs_.front.size() && ev(end_).kind == EventKind::kRightCusp,
         "no right cusp right of V");
  const int i = ev(end_).pos;
  std::size_t pushed = 0;
  // Always work on the mark next to the cusp.
  while (end_ > begin_) {
    const std::size_t j = end_ - 1;
    const Event m = ev(j);
    const int k = m.pos, l = m.lower;
    if (k != i && k != i + 1 && l != i && l != i + 1) {
      apply({first_match(mcs_, j, {11, 12, 13, 14}), j, {}});
      --end_;
      ++pushed;
    } else if (l == i + 1) {
      apply({15, j, {k}});
      --end_;
    } else if (k == i) {
      apply({16, j, {l}});
      --end_;
    } else {
      // (i+1, l) or (k, i): move 17 brings in a copy of the mark, which is
      // cancelled against it; the rest of the product is handled later.
      ensure((k == i + 1 && l < i) || (l == i && k > i + 1),
             "mark joins the cusp strands");
      const std::vector<int> pair =
          k == i + 1 ? std::vector<int>{l, i} : std::vector<int>{i + 1, k};
      const auto block =
          explosion_marks(mcs_.complexes[end_], pair[0], pair[1]);
      std::size_t copy = 0;
      while (copy < block.size() && block[copy] != std::make_pair(k, l)) ++copy;
      ensure(copy < block.size(), "move 17 product lacks the mark");
      apply({17, end_, pair});
      for (std::size_t p = end_ + copy; p > end_; --p) {
        const int c = commute_class(ev(p - 1), ev(p));
        ensure(c != 0, "move 17 product does not commute");
        apply({c, p - 1, {}});
      }
      apply({1, j, {k, l}});
      end_ = j + block.size() - 1;
    }
  }
  // V now sits right of the cusp.
  begin_ = end_ + 1;
  end_ = begin_ + pushed;
  sort();
}

NormalForm sr_bar_form(const Mcs& mcs) {
  Sweeper s(mcs);
  sweep(s, Mode::kSrBar);
  ensure(is_sr_bar_form(s.mcs()), "sweep result is not in S R-bar form");
  return {s.mcs(), s.journal()};
}

NormalForm a_form(const Mcs& mcs) {
  NormalForm sr = sr_bar_form(mcs);
  Sweeper s(sr.mcs);
  sweep(s, Mode::kAForm);
  ensure(is_a_form(s.mcs()), "sweep result is not in A-form");
  std::vector<MoveInstance> journal = sr.journal;
  journal.insert(journal.end(), s.journal().begin(), s.journal().end());
  return {s.mcs(), std::move(journal)};
}

bool is_a_form(const Mcs& mcs) {
  const MarkedFront& f = mcs.front;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (!f[e].is_mark()) continue;
    if (e + 1 >= f.size() || f[e + 1].kind != EventKind::kCrossing) return false;
    if (!(f[e] == Event::mark(f[e + 1].pos + 1, f[e + 1].pos))) return false;
  }
  return true;
}

Augmentation a_form_augmentation(const Mcs& mcs, const ResolvedDGA& dga) {
  if (!is_a_form(mcs))
    fail(ErrorCode::kPrecondition, "MCS is not in A-form");
  const auto ids = generator_ids(mcs.front, dga);
  Augmentation e(dga.generators.size(), false);
  for (std::size_t j = 0; j + 1 < mcs.front.size(); ++j)
    if (mcs.front[j].is_mark()) e[ids.at(j + 1) - 1] = true;
  return e;
}

PsiValue psi(const Mcs& mcs, const ResolvedDGA& dga,
             const AugmentationClasses& classes) {
  const NormalForm af = a_form(mcs);
  PsiValue v;
  v.augmentation = a_form_augmentation(af.mcs, dga);
  ensure(is_augmentation(dga, v.augmentation),
         "A-form marks do not give an augmentation");
  v.class_index = class_index(dga, classes, v.augmentation);
  return v;
}

Mcs aug_to_mcs(const Augmentation& e, const FrontDiagram& front,
               const ResolvedDGA& dga) {
  if (e.size() != dga.generators.size())
    fail(ErrorCode::kDimension, "augmentation length differs from generators");
  if (front.has_marks())
    fail(ErrorCode::kPrecondition, "aug_to_mcs needs an unmarked front");
  std::vector<bool> marked(front.size(), false);
  for (const Generator& g : dga.generators)
    if (e[g.id - 1]) {
      if (g.kind != GeneratorKind::kCrossing || g.grading != 0)
        fail(ErrorCode::kPrecondition,
             "augmentation is nonzero off grading-0 crossings");
      marked[g.event] = true;
    }
  std::vector<Event> events;
  for (std::size_t j = 0; j < front.size(); ++j) {
    if (marked[j]) events.push_back(Event::mark(front[j].pos + 1, front[j].pos));
    events.push_back(front[j]);
  }
  try {
    return reconstruct(MarkedFront(std::move(events)));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInternal) throw;
    fail(ErrorCode::kInternal,
         std::string("augmentation gives no MCS: ") + err.what());
  }
}

std::vector<int> graded_returns(const FrontDiagram& front,
                                const NormalRuling& ruling) {
  std::vector<int> out;
  for (const CrossingClass& c : classify_crossings(front, ruling))
    if (c.tag == CrossingTag::kReturn && c.graded) out.push_back(c.crossing);
  return out;
}

Mcs sr_bar_from_ruling(const FrontDiagram& front, const NormalRuling& ruling,
                       const std::vector<int>& marked) {
  if (front.has_marks())
    fail(ErrorCode::kPrecondition, "ruling front must be unmarked");
  const std::vector<int> returns = graded_returns(front, ruling);
  for (int c : marked)
    if (std::find(returns.begin(), returns.end(), c) == returns.end())
      fail(ErrorCode::kPrecondition,
           "crossing " + std::to_string(c) + " is not a graded return");
  std::vector<Event> events;
  int crossing = 0;
  for (std::size_t j = 0; j < front.size(); ++j) {
    const Event& ev = front[j];
    if (ev.kind != EventKind::kCrossing) {
      events.push_back(ev);
      continue;
    }
    ++crossing;
    const bool sw = ruling.is_switch(crossing);
    const bool mk = std::find(marked.begin(), marked.end(), crossing) !=
                    marked.end();
    if (!sw && !mk) {
      events.push_back(ev);
      continue;
    }
    const CrossingConfig cfg = crossing_config(ruling.pairings[j], ev.pos);
    ensure(cfg.is_switch == sw, "ruling and pairing disagree on a switch");
    events.push_back(Event::mark(ev.pos + 1, ev.pos));
    events.push_back(ev);
    events.insert(events.end(), cfg.after.begin(), cfg.after.end());
  }
  Mcs out;
  try {
    out = reconstruct(MarkedFront(std::move(events)));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInternal) throw;
    fail(ErrorCode::kInternal,
         std::string("S R-bar marks give no MCS: ") + err.what());
  }
  ensure(ruling_of(out).switches == ruling.switches,
         "S R-bar form realizes a different ruling");
  return out;
}

std::vector<int> marked_returns(const Mcs& mcs) {
  // A run of marks between two crossings starts with the marks W trailing
  // the left crossing; only a mark beyond them can be the right one's h.
  const NormalRuling r = ruling_of(mcs);
  const MarkedFront& f = mcs.front;
  std::vector<int> out;
  int crossing = 0;
  std::size_t plain = 0, run = 0, owned = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_mark()) {
      ++run;
      continue;
    }
    std::size_t trailing = 0;
    if (f[j].kind == EventKind::kCrossing) {
      ++crossing;
      const bool marked = run > owned;
      if (marked && !r.is_switch(crossing)) out.push_back(crossing);
      if (marked)
        trailing =
            crossing_config(r.pairings[plain], f[j].pos).after.size();
    }
    owned = trailing;
    run = 0;
    ++plain;
  }
  return out;
}

bool is_sr_bar_form(const Mcs& mcs) {
  const MarkedFront plain = mcs.front.underlying();
  const NormalRuling r = ruling_of(mcs);
  const std::vector<int> marked = marked_returns(mcs);
  const std::vector<int> returns = graded_returns(plain, r);
  for (int c : marked)
    if (std::find(returns.begin(), returns.end(), c) == returns.end())
      return false;
  return sr_bar_from_ruling(plain, r, marked).front == mcs.front;
}

NormalForm srg_form(const Mcs& mcs) {
  if (!is_two_bridge(mcs.front))
    fail(ErrorCode::kNotTwoBridge, "S R-bar_g form needs a 2-bridge front");
  NormalForm sr = sr_bar_form(mcs);
  Sweeper s(sr.mcs);
  for (;;) {
    const MarkedFront& f = s.mcs().front;
    const MarkedFront plain = f.underlying();
    const NormalRuling r = ruling_of(s.mcs());
    const auto classes = classify_crossings(plain, r);
    // Find a marked return whose departure (the previous crossing) is
    // ungraded.
    const auto crossings = crossing_events(f);
    std::size_t ret_at = 0;
    for (int c : marked_returns(s.mcs())) {
      ensure(c >= 2, "return without a departure");
      const CrossingClass& dep = classes[c - 2];
      ensure(dep.tag == CrossingTag::kDeparture,
             "2-bridge return not preceded by its departure");
      if (!dep.graded) {
        ret_at = crossings[c - 1];
        break;
      }
    }
    if (ret_at == 0) break;
    // Layout: X_dep h X_ret [companion].
    const std::size_t h_at = ret_at - 1;
    ensure(h_at >= 1 && f[h_at - 1].kind == EventKind::kCrossing,
           "marked return not adjacent to its departure");
    const std::size_t dep_at = h_at - 1;
    std::size_t block = 1;
    std::size_t plain_ret = 0;
    for (std::size_t j = 0; j < ret_at; ++j) plain_ret += !f[j].is_mark();
    if (!crossing_config(r.pairings[plain_ret], f[ret_at].pos).after.empty()) {
      s.apply({first_match(s.mcs(), ret_at, {7, 8, 9, 10}), ret_at, {}});
      block = 2;
    }
    for (std::size_t b = 0; b < block; ++b)
      s.apply({first_match(s.mcs(), dep_at + b, {7, 8, 9, 10}), dep_at + b, {}});
    s.start(dep_at);
    for (std::size_t b = 0; b < block; ++b) s.absorb_right();
    // The block is one move-17 product in the complex left of it.
    const ChainComplex& c = s.mcs().complexes[dep_at];
    const auto want = s.marks();
    bool removed = false;
    for (int k = 1; k <= c.n() && !removed; ++k)
      for (int l = 1; l < k && !removed; ++l) {
        if (c.deg(l) != c.deg(k) + 1) continue;
        if (explosion_marks(c, l, k) != want) continue;
        s.apply({17, dep_at, {l, k}});
        removed = true;
      }
    ensure(removed, "unmarking a return is not a move-17 product");
  }
  std::vector<MoveInstance> journal = sr.journal;
  journal.insert(journal.end(), s.journal().begin(), s.journal().end());
  ensure(is_sr_bar_form(s.mcs()), "S R-bar_g form left S R-bar form");
  return {s.mcs(), std::move(journal)};
}

bool equivalent_2bridge(const Mcs& a, const Mcs& b) {
  if (!(a.front.underlying() == b.front.underlying()))
    fail(ErrorCode::kPrecondition, "MCSs live on different fronts");
  return srg_form(a).mcs.front == srg_form(b).mcs.front;
}

}  // namespace legendrian
