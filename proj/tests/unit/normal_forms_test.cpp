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
#include "legendrian/error.hpp"
#include "legendrian/normal_forms.hpp"

namespace legendrian {
namespace {

struct FrontData {
  std::string name;
  MarkedFront front;
  ResolvedDGA dga;
  AugmentationClasses classes;
};

std::vector<FrontData> fronts() {
  std::vector<FrontData> out;
  for (auto& c : testing::corpus_fronts()) {
    ResolvedDGA dga = differential(c.front);
    AugmentationClasses cls = partition_classes(dga);
    out.push_back({c.name, c.front, std::move(dga), std::move(cls)});
  }
  return out;
}

TEST(AugToMcs, MarksEveryAugmentedCrossing) {
  const MarkedFront f = parse_front("L1 L3 X2 X2 X2 R1 R1");
  const ResolvedDGA dga = differential(f);
  const Mcs m = aug_to_mcs({true, true, true, false, false}, f, dga);
  EXPECT_EQ(m.front.serialize(), "L1 L3 H3,2 X2 H3,2 X2 H3,2 X2 R1 R1");
  const MarkedFront u = parse_front("L1 R1");
  EXPECT_EQ(aug_to_mcs({false}, u, differential(u)).front, u);
}

TEST(Psi, RoundTripOnEveryAugmentation) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    for (std::size_t a = 0; a < d.classes.augmentations.size(); ++a) {
      const Augmentation& e = d.classes.augmentations[a];
      const PsiValue p = psi(aug_to_mcs(e, d.front, d.dga), d.dga, d.classes);
      EXPECT_EQ(p.class_index, d.classes.class_of[a]);
      EXPECT_TRUE(is_augmentation(d.dga, p.augmentation));
    }
  }
}

TEST(NormalForms, JournalsReplayAndPredicatesHold) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    for (std::size_t a = 0; a < d.classes.augmentations.size() && a < 6; ++a) {
      const Mcs m = aug_to_mcs(d.classes.augmentations[a], d.front, d.dga);
      const NormalForm sr = sr_bar_form(m);
      EXPECT_TRUE(is_sr_bar_form(sr.mcs));
      EXPECT_EQ(replay(m, sr.journal).front, sr.mcs.front);
      EXPECT_EQ(ruling_of(sr.mcs).switches, ruling_of(m).switches);
      const NormalForm af = a_form(m);
      EXPECT_TRUE(is_a_form(af.mcs));
      EXPECT_EQ(replay(m, af.journal).front, af.mcs.front);
      EXPECT_TRUE(is_augmentation(d.dga, a_form_augmentation(af.mcs, d.dga)));
      // The A-form of an augmentation MCS is the MCS itself.
      EXPECT_TRUE(is_a_form(m));
    }
  }
}

// No journal entry undoes the one before it.
void expect_no_cancelling_steps(const Mcs& start, const std::vector<MoveInstance>& j) {
  Mcs cur = start;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Mcs next = apply_move(cur, j[i]);
    if (i + 1 < j.size() && j[i + 1] == j[i]) {
      EXPECT_NE(apply_move(next, j[i]).front, cur.front) << journal_line(j[i]);
    }
    cur = next;
  }
}

TEST(NormalForms, JournalsHaveNoCancellingSteps) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    for (std::size_t a = 0; a < d.classes.augmentations.size() && a < 6; ++a) {
      const Mcs m = aug_to_mcs(d.classes.augmentations[a], d.front, d.dga);
      expect_no_cancelling_steps(m, a_form(m).journal);
      if (is_two_bridge(d.front)) expect_no_cancelling_steps(m, srg_form(m).journal);
    }
  }
}

TEST(NormalForms, IdempotentOnTheirOwnOutput) {
  const FrontData d = fronts()[3];
  for (const Augmentation& e : d.classes.augmentations) {
    const Mcs sr = sr_bar_form(aug_to_mcs(e, d.front, d.dga)).mcs;
    EXPECT_EQ(sr_bar_form(sr).mcs.front, sr.front);
    const Mcs g = srg_form(sr).mcs;
    EXPECT_EQ(srg_form(g).mcs.front, g.front);
  }
}

// Every ruling with m graded returns carries 2^m S R-bar MCSs, sent to 2^m
// distinct augmentations.
TEST(SrBar, TwoToTheMPerRuling) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    for (const NormalRuling& r : enumerate_rulings(d.front)) {
      const auto returns = graded_returns(d.front, r);
      std::set<Augmentation> augs;
      std::set<std::string> forms;
      for (unsigned mask = 0; mask < (1u << returns.size()); ++mask) {
        std::vector<int> marked;
        for (std::size_t b = 0; b < returns.size(); ++b)
          if ((mask >> b) & 1u) marked.push_back(returns[b]);
        const Mcs m = sr_bar_from_ruling(d.front, r, marked);
        ASSERT_TRUE(is_valid_mcs(m.front));
        EXPECT_TRUE(is_sr_bar_form(m));
        EXPECT_EQ(marked_returns(m), marked);
        EXPECT_EQ(ruling_of(m).switches, r.switches);
        forms.insert(m.front.serialize());
        augs.insert(psi(m, d.dga, d.classes).augmentation);
      }
      EXPECT_EQ(forms.size(), std::size_t{1} << returns.size());
      EXPECT_EQ(augs.size(), std::size_t{1} << returns.size());
    }
  }
}

TEST(Srg, BijectionWithClasses) {
  for (const FrontData& d : fronts()) {
    if (!is_two_bridge(d.front)) continue;
    SCOPED_TRACE(d.name);
    std::map<std::string, int> class_of_form;
    for (std::size_t a = 0; a < d.classes.augmentations.size(); ++a) {
      const Mcs g = srg_form(aug_to_mcs(d.classes.augmentations[a], d.front, d.dga)).mcs;
      const int c = d.classes.class_of[a];
      EXPECT_EQ(psi(g, d.dga, d.classes).class_index, c);
      const auto [it, fresh] = class_of_form.insert({g.front.serialize(), c});
      if (!fresh) {
        EXPECT_EQ(it->second, c);
      }
    }
    EXPECT_EQ(static_cast<int>(class_of_form.size()), d.classes.count());
  }
}

TEST(Srg, Trefoil) {
  const FrontData d = fronts()[1];
  std::set<std::string> forms;
  for (const Augmentation& e : d.classes.augmentations)
    forms.insert(srg_form(aug_to_mcs(e, d.front, d.dga)).mcs.front.serialize());
  EXPECT_EQ(forms, (std::set<std::string>{
                       "L1 L3 X2 X2 H3,2 X2 H3,2 R1 R1",
                       "L1 L3 X2 H3,2 X2 H3,2 X2 H3,2 R1 R1",
                       "L1 L3 H3,2 X2 H3,2 H3,2 X2 H3,2 H3,2 X2 H3,2 R1 R1",
                       "L1 L3 H3,2 X2 H3,2 X2 X2 R1 R1",
                       "L1 L3 H3,2 X2 H3,2 X2 H3,2 X2 R1 R1"}));
}

TEST(Srg, ConstantOnMoveOrbits) {
  std::mt19937 rng(71);
  const FrontData d = fronts()[2];
  for (int t = 0; t < 12; ++t) {
    const Augmentation& e = d.classes.augmentations[rng() % d.classes.augmentations.size()];
    const Mcs start = aug_to_mcs(e, d.front, d.dga);
    Mcs cur = start;
    for (int step = 0; step < 5; ++step) {
      const auto moves = applicable_moves(cur);
      cur = apply_move(cur, moves[rng() % moves.size()]);
    }
    EXPECT_TRUE(equivalent_2bridge(start, cur));
    EXPECT_EQ(srg_form(cur).mcs.front, srg_form(start).mcs.front);
  }
  const Mcs a = aug_to_mcs(d.classes.representative(0), d.front, d.dga);
  const Mcs b = aug_to_mcs(d.classes.representative(1), d.front, d.dga);
  EXPECT_FALSE(equivalent_2bridge(a, b));
}

TEST(Srg, NeedsTwoBridge) {
  const FrontData d = fronts()[5];
  const Mcs m = aug_to_mcs(d.classes.augmentations[0], d.front, d.dga);
  try {
    srg_form(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTwoBridge);
  }
}

}  // namespace
}  // namespace legendrian
