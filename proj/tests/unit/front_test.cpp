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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "fixtures.hpp"
#include "legendrian/error.hpp"
#include "legendrian/front.hpp"

namespace legendrian {
namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_front(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kInternal;
}

// Oracle: strands are cusp-to-cusp arcs. Track arc ids slice by slice,
// join the two arcs meeting at every cusp in a union-find, and solve the
// cusp relation upper = lower + 1 by propagation.
struct ArcModel {
  int arcs = 0;
  std::vector<std::vector<int>> slices;        // arc ids, bottom to top
  std::vector<std::pair<int, int>> cusp_pairs;  // (lower, upper)
};

ArcModel arc_model(const std::vector<Event>& events) {
  ArcModel m;
  std::vector<int> cur;
  for (const Event& e : events) {
    m.slices.push_back(cur);
    const int i = e.pos;
    if (e.kind == EventKind::kLeftCusp) {
      const int lo = m.arcs++, hi = m.arcs++;
      cur.insert(cur.begin() + (i - 1), {lo, hi});
      m.cusp_pairs.push_back({lo, hi});
    } else if (e.kind == EventKind::kRightCusp) {
      m.cusp_pairs.push_back({cur[i - 1], cur[i]});
      cur.erase(cur.begin() + (i - 1), cur.begin() + (i + 1));
    } else if (e.kind == EventKind::kCrossing) {
      std::swap(cur[i - 1], cur[i]);
    }
  }
  m.slices.push_back(cur);
  return m;
}

int components(const ArcModel& m) {
  std::vector<int> parent(m.arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : m.cusp_pairs) parent[find(a)] = find(b);
  int count = 0;
  for (int x = 0; x < m.arcs; ++x) count += find(x) == x;
  return count;
}

std::optional<std::vector<int>> potentials(const ArcModel& m) {
  std::vector<std::optional<int>> mu(m.arcs);
  bool changed = true;
  if (m.arcs) mu[0] = 0;
  while (changed) {
    changed = false;
    for (auto [lo, hi] : m.cusp_pairs) {
      if (mu[lo] && !mu[hi]) mu[hi] = *mu[lo] + 1, changed = true;
      if (mu[hi] && !mu[lo]) mu[lo] = *mu[hi] - 1, changed = true;
      if (mu[lo] && mu[hi] && *mu[hi] != *mu[lo] + 1) return std::nullopt;
    }
  }
  std::vector<int> out;
  for (auto& v : mu) out.push_back(v.value_or(0));
  const int low = out.empty() ? 0 : *std::min_element(out.begin(), out.end());
  for (int& v : out) v -= low;
  return out;
}

TEST(ParseFront, SmallestFront) {
  const MarkedFront f = parse_front("L1 R1");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.serialize(), "L1 R1");
}

TEST(ParseFront, TrefoilIsOneComponent) {
  const MarkedFront f = parse_front("L1 L3 X2 X2 X2 R1 R1");
  EXPECT_EQ(f.size(), 7u);
  EXPECT_EQ(f.trace().components, 1);
  EXPECT_EQ(components(arc_model(f.events())), 1);
}

TEST(ParseFront, TwoComponentLinkRejected) {
  std::vector<Event> link = {Event::left_cusp(1), Event::left_cusp(1),
                             Event::right_cusp(1), Event::right_cusp(1)};
  EXPECT_EQ(components(arc_model(link)), 2);
  EXPECT_EQ(code_of("L1 L1 R1 R1"), ErrorCode::kNotAKnot);
}

TEST(ParseFront, Errors) {
  EXPECT_EQ(code_of("L1 Q2 R1"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("L1 X2 R1"), ErrorCode::kInvalidPosition);
  EXPECT_EQ(code_of("L1 L3 X2"), ErrorCode::kUnclosedFront);
  EXPECT_EQ(code_of("L1 X1 R1"), ErrorCode::kNoPotential);
  // Strands 2 and 3 of the trefoil share potential 1; 3 and 4 do not.
  EXPECT_EQ(code_of("L1 L3 H4,3 X2 X2 X2 R1 R1"), ErrorCode::kMarkPotential);
}

TEST(ParseFront, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_front("# comment\nL1 L3\n  X2 Y R1 R1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(std::string(e.what()).rfind("3:6:", 0), 0u) << e.what();
  }
}

TEST(ParseFront, CommentsAndWhitespace) {
  const MarkedFront f = parse_front("# trefoil\n L1  L3\tX2\nX2 X2 R1 R1\n");
  EXPECT_EQ(f.serialize(), "L1 L3 X2 X2 X2 R1 R1");
}

TEST(MaslovPotential, Unknot) {
  const MarkedFront f = parse_front("L1 R1");
  EXPECT_EQ(f.trace().slice_potential(1), (std::vector<int>{0, 1}));
}

TEST(MaslovPotential, TrefoilMatchesPropagation) {
  const MarkedFront f = parse_front("L1 L3 X2 X2 X2 R1 R1");
  // Cusp-1 strands {0, 1}, cusp-2 strands {1, 2}.
  EXPECT_EQ(f.trace().slice_potential(2), (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(f.trace().slice_potential(3), (std::vector<int>{0, 1, 1, 2}));
}

TEST(TwoBridge, Examples) {
  EXPECT_FALSE(is_two_bridge(parse_front("L1 R1")));
  EXPECT_TRUE(is_two_bridge(parse_front("L1 L3 X2 X2 X2 R1 R1")));
  EXPECT_FALSE(is_two_bridge(parse_front("L1 L2 X3 X1 X3 X3 X3 L1 X2 R4 R1 R1")));
}

TEST(FrontProperties, CorpusAgreesWithArcOracle) {
  for (const auto& c : testing::corpus_fronts()) {
    SCOPED_TRACE(c.name);
    const ArcModel m = arc_model(c.front.events());
    EXPECT_EQ(components(m), 1);
    const auto mu = potentials(m);
    ASSERT_TRUE(mu.has_value());
    for (std::size_t e = 0; e <= c.front.size(); ++e) {
      std::vector<int> want;
      for (int arc : m.slices[e]) want.push_back((*mu)[arc]);
      EXPECT_EQ(c.front.trace().slice_potential(e), want) << "slice " << e;
    }
  }
}

TEST(FrontProperties, RandomFronts) {
  std::mt19937 rng(11);
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 3000; ++t) {
    const int cusps = 1 + static_cast<int>(rng() % 3);
    std::vector<Event> ev;
    int n = 0, born = 0;
    for (int s = 0; s < 16; ++s) {
      const int r = static_cast<int>(rng() % 10);
      if (born < cusps && (n == 0 || r < 2)) {
        ev.push_back(Event::left_cusp(1 + static_cast<int>(rng() % (n + 1))));
        n += 2, ++born;
      } else if (n >= 2 && born == cusps && r < 3) {
        ev.push_back(Event::right_cusp(1 + static_cast<int>(rng() % (n - 1))));
        n -= 2;
        if (n == 0) break;
      } else if (n >= 2) {
        ev.push_back(Event::crossing(1 + static_cast<int>(rng() % (n - 1))));
      }
    }
    if (n != 0) continue;
    const ArcModel m = arc_model(ev);
    const bool knot = components(m) == 1;
    const auto mu = potentials(m);
    try {
      const MarkedFront f{ev};
      ++accepted;
      ASSERT_TRUE(knot && mu.has_value());
      const auto count = [&](EventKind k) {
        return std::count_if(ev.begin(), ev.end(),
                             [k](const Event& e) { return e.kind == k; });
      };
      EXPECT_EQ(count(EventKind::kLeftCusp), count(EventKind::kRightCusp));
      EXPECT_EQ(parse_front(f.serialize()).events(), ev);
      for (std::size_t e = 0; e <= f.size(); ++e) {
        std::vector<int> want;
        for (int arc : m.slices[e]) want.push_back((*mu)[arc]);
        ASSERT_EQ(f.trace().slice_potential(e), want);
      }
    } catch (const Error& e) {
      ++rejected;
      if (e.code() == ErrorCode::kNotAKnot) {
        EXPECT_FALSE(knot);
      } else if (e.code() == ErrorCode::kNoPotential) {
        EXPECT_TRUE(knot && !mu);
      }
    }
  }
  EXPECT_GT(accepted, 100);
  EXPECT_GT(rejected, 100);
}

TEST(MarkedFront, UnderlyingDropsMarks) {
  const MarkedFront f = parse_front("L1 L3 H3,2 X2 H3,2 X2 H3,2 X2 R1 R1");
  EXPECT_TRUE(f.has_marks());
  EXPECT_EQ(f.mark_count(), 3);
  EXPECT_EQ(f.underlying().serialize(), "L1 L3 X2 X2 X2 R1 R1");
}

}  // namespace
}  // namespace legendrian
