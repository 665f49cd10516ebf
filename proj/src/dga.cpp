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

#include "legendrian/dga.hpp"

#include <algorithm>
#include <unordered_map>

#include "legendrian/error.hpp"

namespace legendrian {

void Poly::toggle(const Word& w) {
  auto [it, inserted] = terms_.insert(w);
  if (!inserted) terms_.erase(it);
}

void Poly::add(const Poly& p) {
  for (const Word& w : p.terms_) toggle(w);
}

std::vector<Generator> resolve(const FrontDiagram& front) {
  std::vector<Generator> gens;
  const Trace& tr = front.trace();
  for (std::size_t e : generator_events(front)) {
    const Event& ev = front[e];
    Generator g;
    g.id = static_cast<int>(gens.size()) + 1;
    g.pos = ev.pos;
    g.event = e;
    if (ev.kind == EventKind::kRightCusp) {
      g.kind = GeneratorKind::kRightCusp;
      g.grading = 1;
    } else {
      g.kind = GeneratorKind::kCrossing;
      // Left of the crossing the strand at pos+1 leaves with the smaller slope.
      const auto& sl = tr.before[e];
      g.grading = tr.potential[sl[ev.pos]] - tr.potential[sl[ev.pos - 1]];
    }
    gens.push_back(g);
  }
  return gens;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// A disk is cut by each vertical line into sheets: strips between an upper
// and a lower boundary strand. Sheets are grown leftward independently;
// a sheet splits only where it encloses a right cusp. Words list the corners
// clockwise from the positive corner: a sheet contributes its lower-boundary
// corners right to left, then its sub-sheets, then its upper-boundary
// corners left to right.
struct DiskSearch {
  const FrontDiagram& front;
  std::unordered_map<std::size_t, int> gen_at;  // event -> generator id

  // Positions are in the slice right of event f.
  std::vector<Word> sheet(std::ptrdiff_t f, int u, int l) const {
    for (; f >= 0; --f) {
      const Event& ev = front[static_cast<std::size_t>(f)];
      const int k = ev.pos;
      switch (ev.kind) {
        case EventKind::kMark:
          continue;
        case EventKind::kRightCusp:
          if (l < k && u >= k) return around_right_cusp(f, u + 2, l);
          if (u >= k) u += 2;
          if (l >= k) l += 2;
          continue;
        case EventKind::kLeftCusp:
          if (u == k + 1 && l == k) return {Word{}};
          if (u == k || u == k + 1 || l == k || l == k + 1) return {};
          if (u > k + 1) u -= 2;
          if (l > k + 1) l -= 2;
          continue;
        case EventKind::kCrossing:
          return at_crossing(f, u, l);
      }
    }
    ensure(false, "disk boundary ran off the left end of the front");
    return {};
  }

  // Upper boundary at k may pass (to k+1) or turn (convex corner, stays at
  // k); at k+1 it passes to k. The lower boundary mirrors this.
  std::vector<Word> at_crossing(std::ptrdiff_t f, int u, int l) const {
    const int k = front[static_cast<std::size_t>(f)].pos;
    const int q = gen_at.at(static_cast<std::size_t>(f));
    std::vector<std::pair<int, bool>> us, ls;  // (new position, corner)
    if (u == k) {
      us = {{k + 1, false}, {k, true}};
    } else if (u == k + 1) {
      us = {{k, false}};
    } else {
      us = {{u, false}};
    }
    if (l == k + 1) {
      ls = {{k, false}, {k + 1, true}};
    } else if (l == k) {
      ls = {{k + 1, false}};
    } else {
      ls = {{l, false}};
    }
    std::vector<Word> out;
    for (auto [nu, cu] : us) {
      for (auto [nl, cl] : ls) {
        if (nu <= nl) continue;
        for (Word w : sheet(f - 1, nu, nl)) {
          if (cl) w.insert(w.begin(), q);
          if (cu) w.push_back(q);
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  // The sheet [l, u] (left-slice positions) encloses the right cusp whose
  // strands are k, k+1. It either covers the whole cusp, or splits into a
  // lower and an upper sheet whose facing boundaries run along the cusp
  // strands, with zero, one or two corners at the cusp's loop crossing.
  std::vector<Word> around_right_cusp(std::ptrdiff_t f, int u, int l) const {
    const int k = front[static_cast<std::size_t>(f)].pos;
    const int z = gen_at.at(static_cast<std::size_t>(f));
    std::vector<Word> out = sheet(f - 1, u, l);
    struct Split {
      int lower_top, upper_bottom;
      Word mid;
    };
    const Split splits[] = {
        {k + 1, k, {}},        // sheets overlap over the cusp
        {k + 1, k + 1, {z}},   // slit along the upper cusp strand
        {k, k, {z}},           // slit along the lower cusp strand
        {k, k + 1, {z, z}},    // cusp interior excluded
    };
    for (const Split& s : splits) {
      const auto lower = sheet(f - 1, s.lower_top, l);
      if (lower.empty()) continue;
      const auto upper = sheet(f - 1, u, s.upper_bottom);
      for (const Word& a : lower)
        for (const Word& b : upper) out.push_back(concat(concat(a, s.mid), b));
    }
    return out;
  }
};

}  // namespace

std::vector<Word> enumerate_disks(const FrontDiagram& front,
                                  const std::vector<Generator>& gens, int q) {
  DiskSearch s{front, {}};
  for (const Generator& g : gens) s.gen_at[g.event] = g.id;
  const Generator& g = gens.at(q - 1);
  std::vector<Word> found;
  if (g.kind == GeneratorKind::kRightCusp) found.push_back({});  // the loop
  for (Word& w : s.sheet(static_cast<std::ptrdiff_t>(g.event) - 1, g.pos + 1,
                         g.pos))
    found.push_back(std::move(w));
  return found;
}

ResolvedDGA differential(const FrontDiagram& front) {
  ResolvedDGA dga;
  dga.generators = resolve(front);
  dga.differential.resize(dga.generators.size());
  for (const Generator& g : dga.generators) {
    for (const Word& w : enumerate_disks(front, dga.generators, g.id))
      dga.differential[g.id - 1].toggle(w);
  }
  return dga;
}

Poly d_word(const ResolvedDGA& dga, const Word& w) {
  Poly out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const Word& t : dga.d(w[i]).terms()) {
      Word r(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      r.insert(r.end(), t.begin(), t.end());
      r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
      out.toggle(r);
    }
  }
  return out;
}

Poly d_poly(const ResolvedDGA& dga, const Poly& p) {
  Poly out;
  for (const Word& w : p.terms()) out.add(d_word(dga, w));
  return out;
}

bool check_d_squared(const ResolvedDGA& dga) {
  for (const Poly& p : dga.differential)
    if (!d_poly(dga, p).empty()) return false;
  return true;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += "q" + std::to_string(w[i]);
  }
  return s;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const Word& w : p.terms()) {
    if (!s.empty()) s += " + ";
    s += word_to_string(w);
  }
  return s;
}

}  // namespace legendrian
