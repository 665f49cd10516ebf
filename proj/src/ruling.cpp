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

#include "legendrian/ruling.hpp"

#include <algorithm>

#include "legendrian/error.hpp"

namespace legendrian {

bool NormalRuling::is_switch(int crossing) const {
  return std::binary_search(switches.begin(), switches.end(), crossing);
}

std::vector<std::size_t> crossing_events(const FrontDiagram& front) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < front.size(); ++e)
    if (front[e].kind == EventKind::kCrossing) out.push_back(e);
  return out;
}

int crossing_grading(const FrontDiagram& front, std::size_t event) {
  const auto mu = front.trace().slice_potential(event);
  const int i = front[event].pos;
  return mu[i] - mu[i - 1];
}

namespace {

// Closed intervals [x, p[x]] and [y, p[y]] interleave.
bool interleaved(const Pairing& p, int x, int y) {
  int a0 = std::min(x, p[x]), a1 = std::max(x, p[x]);
  int b0 = std::min(y, p[y]), b1 = std::max(y, p[y]);
  if (a0 > b0) {
    std::swap(a0, b0);
    std::swap(a1, b1);
  }
  return b0 < a1 && a1 < b1;
}

}  // namespace

bool switch_is_normal(const Pairing& p, int i) {
  return p[i] != i + 1 && !interleaved(p, i, i + 1);
}

bool advance_pairing(const FrontDiagram& front, std::size_t e, bool switched,
                     const Pairing& left, Pairing& right) {
  const Event& ev = front[e];
  const int n = static_cast<int>(left.size()) - 1;
  const int k = ev.pos;
  switch (ev.kind) {
    case EventKind::kMark:
      ensure(!switched, "switch at a mark");
      right = left;
      return true;
    case EventKind::kLeftCusp: {
      ensure(!switched, "switch at a cusp");
      auto shift = [k](int x) { return x >= k ? x + 2 : x; };
      right.assign(n + 3, 0);
      for (int x = 1; x <= n; ++x) right[shift(x)] = shift(left[x]);
      right[k] = k + 1;
      right[k + 1] = k;
      return true;
    }
    case EventKind::kRightCusp: {
      ensure(!switched, "switch at a cusp");
      if (left[k] != k + 1) return false;
      auto shift = [k](int x) { return x > k + 1 ? x - 2 : x; };
      right.assign(n - 1, 0);
      for (int x = 1; x <= n; ++x)
        if (x != k && x != k + 1) right[shift(x)] = shift(left[x]);
      return true;
    }
    case EventKind::kCrossing:
      break;
  }
  // Companion paths never meet away from cusps.
  if (left[k] == k + 1) return false;
  if (switched) {
    if (crossing_grading(front, e) != 0 || !switch_is_normal(left, k))
      return false;
    right = left;
    return true;
  }
  auto swap = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
  right.assign(n + 1, 0);
  for (int x = 1; x <= n; ++x) right[swap(x)] = swap(left[x]);
  return true;
}

namespace {

struct RulingSearch {
  const FrontDiagram& front;
  std::vector<Pairing> pairings;
  std::vector<int> switches;
  std::vector<NormalRuling> found;
  int crossing = 0;

  void run(std::size_t e) {
    if (e == front.size()) {
      NormalRuling r;
      r.switches = switches;
      r.pairings = pairings;
      r.classification = classify_crossings(front, r);
      found.push_back(std::move(r));
      return;
    }
    const bool is_crossing = front[e].kind == EventKind::kCrossing;
    if (is_crossing) ++crossing;
    for (bool sw : {false, true}) {
      if (sw && !is_crossing) break;
      Pairing next;
      if (!advance_pairing(front, e, sw, pairings.back(), next)) continue;
      pairings.push_back(std::move(next));
      if (sw) switches.push_back(crossing);
      run(e + 1);
      if (sw) switches.pop_back();
      pairings.pop_back();
    }
    if (is_crossing) --crossing;
  }
};

}  // namespace

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& front) {
  RulingSearch s{front, {Pairing(1, 0)}, {}, {}, 0};
  s.run(0);
  std::sort(s.found.begin(), s.found.end(),
            [](const NormalRuling& a, const NormalRuling& b) {
              return a.switches < b.switches;
            });
  return s.found;
}

NormalRuling ruling_from_switches(const FrontDiagram& front,
                                  const std::vector<int>& switches) {
  NormalRuling r;
  r.switches = switches;
  std::sort(r.switches.begin(), r.switches.end());
  r.pairings = {Pairing(1, 0)};
  int crossing = 0;
  for (std::size_t e = 0; e < front.size(); ++e) {
    bool sw = false;
    if (front[e].kind == EventKind::kCrossing) sw = r.is_switch(++crossing);
    Pairing next;
    if (!advance_pairing(front, e, sw, r.pairings.back(), next))
      fail(ErrorCode::kPrecondition,
           "switch set is not a graded normal ruling (event " +
               std::to_string(e + 1) + ")");
    r.pairings.push_back(std::move(next));
  }
  r.classification = classify_crossings(front, r);
  return r;
}

std::vector<CrossingClass> classify_crossings(const FrontDiagram& front,
                                              const NormalRuling& ruling) {
  std::vector<CrossingClass> out;
  int crossing = 0;
  for (std::size_t e : crossing_events(front)) {
    CrossingClass c;
    c.event = e;
    c.crossing = ++crossing;
    c.graded = crossing_grading(front, e) == 0;
    if (ruling.is_switch(crossing)) {
      c.tag = CrossingTag::kSwitch;
    } else {
      const int k = front[e].pos;
      c.tag = interleaved(ruling.pairings[e], k, k + 1) ? CrossingTag::kReturn
                                                         : CrossingTag::kDeparture;
    }
    out.push_back(c);
  }
  return out;
}

bool nu_defined(const FrontDiagram& front) {
  return front.left_cusp_count() <= 2;
}

int nu(const FrontDiagram& front, const NormalRuling& ruling) {
  if (!nu_defined(front))
    fail(ErrorCode::kNotTwoBridge,
         "departure-return pairs need at most two left cusps");
  const auto& cls = ruling.classification;
  int count = 0;
  for (std::size_t j = 0; j < cls.size(); ++j) {
    if (cls[j].tag != CrossingTag::kReturn) continue;
    // With two left cusps the departure is the crossing just before; with
    // one there are no returns.
    ensure(j > 0 && cls[j - 1].tag == CrossingTag::kDeparture,
           "return without an adjacent departure");
    if (cls[j].graded && cls[j - 1].graded) ++count;
  }
  return count;
}

RulingSummary summarize_rulings(const FrontDiagram& front) {
  RulingSummary s;
  s.rulings = enumerate_rulings(front);
  s.nu_defined = nu_defined(front);
  if (s.nu_defined) {
    for (const NormalRuling& r : s.rulings) {
      s.nu.push_back(nu(front, r));
      s.total += 1LL << s.nu.back();
    }
  }
  return s;
}

}  // namespace legendrian
