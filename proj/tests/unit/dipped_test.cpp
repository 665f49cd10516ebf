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

#include <random>

#include "fixtures.hpp"
#include "legendrian/dipped.hpp"
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

Mat2 h_matrix(int n, int k, int l) { return Mat2::unit(n, k, l); }

TEST(Dipped, UnknotFirstTildeIsH21) {
  const Mcs m = reconstruct(parse_front("L1 R1"));
  const DippedAugmentation da = mcs_to_dipped_aug(m);
  EXPECT_EQ(da.diagram.dips(), 2u);
  EXPECT_EQ(a_tilde(da.diagram, da.valuation, 1), h_matrix(2, 2, 1));
  EXPECT_TRUE(check_dipped_augmentation(da.diagram, da.valuation));
}

TEST(Dipped, TrefoilAllOnesHasTenDips) {
  const Mcs m = reconstruct(parse_front(testing::read_corpus_file("mcs/trefoil_all_ones.front")));
  const DippedAugmentation da = mcs_to_dipped_aug(m);
  EXPECT_EQ(da.diagram.dips(), 10u);
  EXPECT_EQ(da.diagram.inserts.size(), 11u);
  EXPECT_EQ(da.diagram.dim(10), 0);
  EXPECT_NO_THROW(validate(da.diagram));
}

// Every augmentation MCS of the corpus is a dipped augmentation whose
// a-lattices are the gap complexes.
TEST(Dipped, OracleAgreesWithGapComplexes) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    for (const Augmentation& e : d.classes.augmentations) {
      const Mcs m = aug_to_mcs(e, d.front, d.dga);
      const DippedAugmentation da = mcs_to_dipped_aug(m);
      ASSERT_EQ(da.diagram.dips(), m.front.size());
      EXPECT_EQ(explain_dipped_augmentation(da.diagram, da.valuation), "");
      for (std::size_t j = 1; j <= da.diagram.dips(); ++j) {
        EXPECT_EQ(da.valuation.A[j - 1], m.complexes[j].d) << "dip " << j;
        EXPECT_EQ(da.diagram.potentials[j - 1], m.complexes[j].grading);
      }
      EXPECT_TRUE(is_minimal_occ_simple(da.diagram, da.valuation));
      EXPECT_EQ(dipped_aug_to_mcs(da).front, m.front);
      const DippedAugmentation db = dip_augmentation(d.front, d.dga, e);
      EXPECT_EQ(db.diagram.inserts, da.diagram.inserts);
      EXPECT_EQ(db.diagram.potentials, da.diagram.potentials);
      EXPECT_EQ(db.valuation, da.valuation);
    }
  }
}

TEST(Dipped, FaultsAreRejected) {
  const Mcs m = reconstruct(parse_front(testing::read_corpus_file("mcs/trefoil_all_ones.front")));
  const DippedAugmentation da = mcs_to_dipped_aug(m);
  for (std::size_t j = 1; j + 1 < da.diagram.dips(); ++j) {
    const int n = da.diagram.dim(j);
    for (int k = 2; k <= n; ++k)
      for (int l = 1; l < k; ++l) {
        DipValuation bad = da.valuation;
        bad.A[j - 1].flip(k, l);
        EXPECT_FALSE(check_dipped_augmentation(da.diagram, bad)) << j << " " << k << l;
        EXPECT_NE(explain_dipped_augmentation(da.diagram, bad), "");
      }
  }
}

TEST(Dipped, ExtensionsKeepAugmentations) {
  const FrontData d = fronts()[2];
  for (const Augmentation& e : d.classes.augmentations) {
    const DippedAugmentation da = mcs_to_dipped_aug(aug_to_mcs(e, d.front, d.dga));
    for (std::size_t site = 1; site <= da.diagram.inserts.size(); ++site) {
      const DippedAugmentation z = extend_by_zero(da, site);
      EXPECT_EQ(z.diagram.dips(), da.diagram.dips() + 1);
      EXPECT_TRUE(check_dipped_augmentation(z.diagram, z.valuation));
      const Insert& ins = da.diagram.inserts[site - 1];
      if (ins.kind == InsertKind::kCrossing && ins.grading == 0) {
        const HandleslideExtension h = extend_by_handleslide(da, site);
        EXPECT_TRUE(check_dipped_augmentation(h.result.diagram, h.result.valuation));
        EXPECT_NE(h.crossing_value, da.valuation.inserts[site - 1]);
      } else {
        EXPECT_THROW(extend_by_handleslide(da, site), Error);
      }
    }
  }
}

// The linear solve and the exhaustive search decide the same pairs, and
// both agree with homotopy of augmentations on the DGA side.
TEST(DippedHomotopy, AgreesWithDgaClasses) {
  for (const FrontData& d : fronts()) {
    SCOPED_TRACE(d.name);
    std::vector<Mcs> ms;
    for (const Augmentation& e : d.classes.augmentations)
      ms.push_back(aug_to_mcs(e, d.front, d.dga));
    int exhaustive = 0;
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a; b < ms.size(); ++b) {
        const AlignedPair p = align(ms[a], ms[b]);
        const HomotopySearch r = find_dipped_homotopy(p.diagram, p.first, p.second);
        const bool same = d.classes.class_of[a] == d.classes.class_of[b];
        ASSERT_EQ(r.homotopy.has_value(), same) << a << " " << b;
        if (r.homotopy) {
          EXPECT_TRUE(check_dipped_homotopy(p.diagram, p.first, p.second, *r.homotopy));
          EXPECT_TRUE(r.contradiction.empty());
        } else {
          EXPECT_FALSE(r.contradiction.empty());
        }
        if (r.unknowns <= 14 && exhaustive < 40) {
          ++exhaustive;
          const auto h = find_dipped_homotopy_exhaustive(p.diagram, p.first, p.second, 14);
          EXPECT_EQ(h.has_value(), same) << a << " " << b;
          if (h) {
            EXPECT_TRUE(check_dipped_homotopy(p.diagram, p.first, p.second, *h));
          }
        }
      }
  }
}

TEST(DippedHomotopy, ExhaustiveSearchHasACap) {
  const FrontData d = fronts()[3];
  const Mcs a = aug_to_mcs(d.classes.augmentations[0], d.front, d.dga);
  const AlignedPair p = align(a, a);
  EXPECT_THROW(find_dipped_homotopy_exhaustive(p.diagram, p.first, p.second, 0), Error);
}

// Two S R-bar_g forms on one ruling that differ in one marked graded return
// with a graded departure: the equations force H(a_4^{3,2}) to be 0 and 1.
TEST(DippedHomotopy, MarkedReturnWitness) {
  const FrontData d = fronts()[1];
  const Mcs unmarked = reconstruct(parse_front("L1 L3 X2 X2 H3,2 X2 H3,2 R1 R1"));
  const Mcs marked = reconstruct(parse_front("L1 L3 X2 H3,2 X2 H3,2 X2 H3,2 R1 R1"));
  EXPECT_EQ(ruling_of(unmarked).switches, ruling_of(marked).switches);
  const AlignedPair p = align(unmarked, marked);
  const HomotopySearch r = find_dipped_homotopy(p.diagram, p.first, p.second);
  ASSERT_FALSE(r.homotopy.has_value());
  EXPECT_EQ(r.contradiction,
            (std::vector<std::string>{"q_5: H(a_4^{3,2}) = 0",
                                      "b_3^{3,2}: H(a_3^{3,2}) = 0",
                                      "b_4^{3,2}: H(a_3^{3,2}) + H(a_4^{3,2}) = 1"}));
  EXPECT_FALSE(find_dipped_homotopy_exhaustive(p.diagram, p.first, p.second).has_value());
  EXPECT_NE(psi(unmarked, d.dga, d.classes).class_index,
            psi(marked, d.dga, d.classes).class_index);
}

TEST(DippedHomotopy, RandomMoveSequencesStayHomotopic) {
  std::mt19937 rng(81);
  const FrontData d = fronts()[2];
  for (int t = 0; t < 15; ++t) {
    const Mcs start =
        aug_to_mcs(d.classes.augmentations[rng() % d.classes.augmentations.size()],
                   d.front, d.dga);
    Mcs cur = start;
    for (int step = 0; step < 6; ++step) {
      const auto moves = applicable_moves(cur);
      cur = apply_move(cur, moves[rng() % moves.size()]);
    }
    const AlignedPair p = align(start, cur);
    EXPECT_TRUE(check_dipped_augmentation(p.diagram, p.second));
    EXPECT_TRUE(find_dipped_homotopy(p.diagram, p.first, p.second).homotopy.has_value());
  }
}

TEST(Align, PadsGapsToEqualDipCounts) {
  const Mcs a = reconstruct(parse_front("L1 L3 X2 X2 H3,2 X2 H3,2 R1 R1"));
  const Mcs b = reconstruct(parse_front("L1 L3 H3,2 X2 H3,2 H3,2 X2 H3,2 H3,2 X2 H3,2 R1 R1"));
  const AlignedPair p = align(a, b);
  EXPECT_EQ(p.diagram.dips(), b.front.size());
  EXPECT_TRUE(check_dipped_augmentation(p.diagram, p.first));
  EXPECT_TRUE(check_dipped_augmentation(p.diagram, p.second));
  EXPECT_THROW(align(a, reconstruct(parse_front("L1 R1"))), Error);
}

}  // namespace
}  // namespace legendrian
