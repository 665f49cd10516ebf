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

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "legendrian/dga.hpp"
#include "legendrian/ruling.hpp"

namespace legendrian {
namespace {

int word_grading(const ResolvedDGA& dga, const Word& w) {
  int g = 0;
  for (int x : w) g += dga.gen(x).grading;
  return g;
}

TEST(Resolve, TrefoilGenerators) {
  const ResolvedDGA dga = differential(parse_front("L1 L3 X2 X2 X2 R1 R1"));
  ASSERT_EQ(dga.size(), 5);
  std::vector<int> gradings;
  for (const Generator& g : dga.generators) gradings.push_back(g.grading);
  EXPECT_EQ(gradings, (std::vector<int>{0, 0, 0, 1, 1}));
  EXPECT_EQ(dga.gen(4).kind, GeneratorKind::kRightCusp);
  EXPECT_EQ(dga.gen(1).event, 2u);
}

TEST(Differential, TrefoilOuterCusp) {
  const ResolvedDGA dga = differential(parse_front("L1 L3 X2 X2 X2 R1 R1"));
  EXPECT_TRUE(dga.d(5).contains(Word{3, 2, 1}));
  EXPECT_TRUE(dga.d(5).contains(Word{}));
  EXPECT_FALSE(dga.d(5).contains(Word{1, 2, 3}));
  EXPECT_EQ(poly_to_string(dga.d(5)), "1 + q1 + q3 + q3 q2 q1");
  for (int q = 1; q <= 3; ++q) EXPECT_TRUE(dga.d(q).empty());
}

TEST(Differential, Unknot) {
  const ResolvedDGA dga = differential(parse_front("L1 R1"));
  ASSERT_EQ(dga.size(), 1);
  EXPECT_EQ(dga.gen(1).grading, 1);
  // The two disks at the right cusp cancel.
  EXPECT_EQ(poly_to_string(dga.d(1)), "0");
}

// Crossing gradings against the potentials of the two crossing strands.
TEST(Differential, GradingsMatchPotentials) {
  for (const auto& c : testing::corpus_fronts()) {
    SCOPED_TRACE(c.name);
    for (const Generator& g : resolve(c.front)) {
      if (g.kind == GeneratorKind::kRightCusp) {
        EXPECT_EQ(g.grading, 1);
        continue;
      }
      const auto mu = c.front.trace().slice_potential(g.event);
      EXPECT_EQ(g.grading, mu[g.pos] - mu[g.pos - 1]);
      EXPECT_EQ(g.grading, crossing_grading(c.front, g.event));
    }
  }
}

// Every disk lowers grading by one and has its corners left of its
// positive corner.
TEST(Differential, DegreeAndOrderProperties) {
  for (const auto& c : testing::corpus_fronts()) {
    SCOPED_TRACE(c.name);
    const ResolvedDGA dga = differential(c.front);
    for (int q = 1; q <= dga.size(); ++q)
      for (const Word& w : dga.d(q).terms()) {
        EXPECT_EQ(word_grading(dga, w), dga.gen(q).grading - 1)
            << "d q" << q << " " << word_to_string(w);
        for (int x : w) EXPECT_LT(dga.gen(x).event, dga.gen(q).event);
      }
  }
}

TEST(Differential, SquaresToZeroOnCorpus) {
  for (const auto& c : testing::corpus_fronts()) {
    SCOPED_TRACE(c.name);
    const ResolvedDGA dga = differential(c.front);
    EXPECT_TRUE(check_d_squared(dga));
    EXPECT_TRUE(testing::brute_force_d_squared_zero(dga));
  }
}

TEST(Differential, SquaresToZeroOnRandomFronts) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int t = 0; t < 4000 && checked < 150; ++t) {
    MarkedFront f;
    if (!testing::random_front(rng, 1 + static_cast<int>(rng() % 3), 14, f)) continue;
    ++checked;
    const ResolvedDGA dga = differential(f);
    ASSERT_TRUE(check_d_squared(dga)) << f.serialize();
    ASSERT_TRUE(testing::brute_force_d_squared_zero(dga)) << f.serialize();
  }
  EXPECT_GE(checked, 100);
}

// The d^2 check must notice a single wrong term.
TEST(Differential, FaultInjectionIsCaught) {
  ResolvedDGA dga = differential(parse_front("L1 L3 X2 X2 X2 R1 R1"));
  ASSERT_TRUE(check_d_squared(dga));
  ResolvedDGA bad = dga;
  bad.differential[2].toggle(Word{});  // d q3 = 1 has a non-zero d q5 image
  EXPECT_FALSE(check_d_squared(bad));
  EXPECT_FALSE(testing::brute_force_d_squared_zero(bad));
}

TEST(Differential, DroppingRepeatedCornersBreaksSquare) {
  ResolvedDGA dga = differential(testing::corpus_fronts()[3].front);
  ASSERT_TRUE(check_d_squared(dga));
  for (Poly& p : dga.differential) {
    Poly kept;
    for (const Word& w : p.terms())
      if (std::set<int>(w.begin(), w.end()).size() == w.size()) kept.toggle(w);
    p = kept;
  }
  EXPECT_FALSE(check_d_squared(dga));
  EXPECT_FALSE(testing::brute_force_d_squared_zero(dga));
}

// Immersed disks with two corners at one crossing are part of the
// differential on these fronts; the counts are pinned.
TEST(Differential, RepeatedCornerCounts) {
  const std::map<std::string, int> want = {{"unknot", 0},     {"trefoil", 0},
                                           {"twobridge5", 2}, {"twobridge7", 26},
                                           {"twobridge9", 0}, {"threecusp", 12}};
  for (const auto& c : testing::corpus_fronts()) {
    const auto gens = resolve(c.front);
    int repeated = 0;
    for (const Generator& g : gens)
      for (const Word& w : enumerate_disks(c.front, gens, g.id))
        repeated += std::set<int>(w.begin(), w.end()).size() != w.size();
    EXPECT_EQ(repeated, want.at(c.name)) << c.name;
  }
  const ResolvedDGA dga = differential(testing::corpus_fronts()[2].front);
  EXPECT_TRUE(dga.d(7).contains(Word{4, 5, 2, 4}));
}

TEST(Differential, DWordIsALeibnizSum) {
  const ResolvedDGA dga = differential(parse_front("L1 L3 X2 X2 X2 R1 R1"));
  // d(q5 q4) = d(q5) q4 + q5 d(q4).
  Poly want;
  for (const Word& w : dga.d(5).terms()) {
    Word x = w;
    x.push_back(4);
    want.toggle(x);
  }
  for (const Word& w : dga.d(4).terms()) {
    Word x{5};
    x.insert(x.end(), w.begin(), w.end());
    want.toggle(x);
  }
  EXPECT_EQ(d_word(dga, Word{5, 4}), want);
}

}  // namespace
}  // namespace legendrian
