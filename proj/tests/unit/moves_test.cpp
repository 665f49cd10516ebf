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
#include "legendrian/moves.hpp"
#include "legendrian/normal_forms.hpp"

namespace legendrian {
namespace {

// MCSs where the rarer families apply: a mark straddling a crossing (10),
// a mark below, above or straddling a cusp (11, 12, 13), and one that
// changes the implicit handleslides of a right cusp (14).
constexpr const char* kRareMoves[] = {
    "L1 L3 H4,1 H4,1 X2 X3 X1 X2 X2 X2 H3,2 X2 R1 R1",
    "L1 L2 X1 X1 L2 H2,1 X1 X5 H4,3 X3 X5 H2,1 H2,1 R4 R2 R1",
    "L1 L1 H3,2 H3,2 H3,2 X2 L3 X4 X4 R1 H3,2 X2 R3 R1",
    "L1 L1 H3,2 X2 H3,2 H3,2 L3 H3,2 X2 R3 R3 R1",
    "L1 L2 H4,3 X3 L4 H6,5 X5 H6,5 H6,5 R2 R2 R1",
};

struct Subject {
  Mcs mcs;
  ResolvedDGA dga;
  AugmentationClasses classes;
};

std::vector<Subject> subjects() {
  std::vector<Subject> out;
  for (const auto& c : testing::corpus_fronts()) {
    if (c.front.size() > 11) continue;
    ResolvedDGA dga = differential(c.front);
    AugmentationClasses cls = partition_classes(dga);
    for (std::size_t a = 0; a < cls.augmentations.size() && a < 3; ++a)
      out.push_back({aug_to_mcs(cls.augmentations[a], c.front, dga), dga, cls});
  }
  for (const char* text : kRareMoves) {
    const MarkedFront f = parse_front(text);
    ResolvedDGA dga = differential(f.underlying());
    AugmentationClasses cls = partition_classes(dga);
    out.push_back({reconstruct(f), std::move(dga), std::move(cls)});
  }
  return out;
}

// Complexes away from the window must not change.
void expect_local(const Mcs& before, const Mcs& after, const MoveInstance& m) {
  const std::size_t n = before.front.size(), n2 = after.front.size();
  for (std::size_t e = 0; e <= m.at; ++e)
    ASSERT_EQ(before.complexes[e], after.complexes[e]) << journal_line(m);
  const std::size_t lo = std::min(n, n2);
  const std::size_t reach = m.id == 1 || m.id == 17 ? 0 : 3;
  if (lo < m.at + reach) return;
  for (std::size_t j = 0; j <= lo - m.at - reach; ++j)
    ASSERT_EQ(before.complexes[n - j], after.complexes[n2 - j]) << journal_line(m);
}

TEST(Journal, RoundTrip) {
  const MoveInstance m{17, 4, {2, 5}};
  // Event indices are written 1-based.
  EXPECT_EQ(journal_line(m), "#17 @5 2 5");
  EXPECT_EQ(parse_journal_line("#17 @5 2 5"), m);
  const std::vector<MoveInstance> j = {{1, 0, {3, 2}}, {7, 2, {}}, m};
  EXPECT_EQ(parse_journal("// header\n\n" + format_journal(j) + "\n"), j);
}

TEST(Journal, RejectsMalformedLines) {
  for (const char* bad : {"1 @4", "#x @4", "#1 4 3 2", "#1 @0 3 2", "#18 @1"}) {
    try {
      parse_journal_line(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntax) << bad;
    }
  }
}

// Short random walks from every subject; each visited state checks a few
// instances of every family that applies there.
TEST(Moves, EveryFamilyIsLocalAndKeepsPsi) {
  std::mt19937 rng(63);
  std::map<int, int> seen;
  for (const Subject& s : subjects()) {
    const int base = psi(s.mcs, s.dga, s.classes).class_index;
    for (int walk = 0; walk < 3; ++walk) {
      Mcs cur = s.mcs;
      for (int step = 0; step < 5; ++step) {
        const auto moves = applicable_moves(cur);
        std::map<int, int> tried;
        for (const MoveInstance& m : moves) {
          if (tried[m.id]++ >= 2 || seen[m.id] >= 40) continue;
          ++seen[m.id];
          ASSERT_TRUE(move_matches(cur, m));
          const Mcs after = apply_move(cur, m);
          EXPECT_EQ(after.front.underlying(), cur.front.underlying());
          EXPECT_EQ(reconstruct(after.front).complexes, after.complexes);
          expect_local(cur, after, m);
          EXPECT_EQ(psi(after, s.dga, s.classes).class_index, base) << journal_line(m);
          // Applying the same instance again undoes it, unless the first
          // application removed marks and others of the same kind remain.
          if (after.front.size() >= cur.front.size()) {
            EXPECT_EQ(apply_move(after, m).front, cur.front) << journal_line(m);
          }
        }
        if (moves.empty()) break;  // the unknot has no marks to place
        cur = apply_move(cur, moves[rng() % moves.size()]);
      }
    }
  }
  for (int id = 1; id <= 17; ++id) EXPECT_GT(seen[id], 0) << "move " << id;
}

TEST(Moves, MismatchesAreReported) {
  const Mcs m = reconstruct(parse_front(testing::read_corpus_file("mcs/trefoil_all_ones.front")));
  const MoveInstance wrong{2, 0, {}};
  EXPECT_FALSE(move_matches(m, wrong));
  try {
    apply_move(m, wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPatternMismatch);
  }
}

TEST(Moves, ExplosionNeedsAdjacentDegrees) {
  const Mcs m = reconstruct(parse_front(testing::read_corpus_file("mcs/trefoil_all_ones.front")));
  // Right of L1 L3 the gradings are 0 1 1 2; |y1| = 0 is not |y2| + 1.
  try {
    apply_move(m, {17, 2, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(Moves, ExplosionMarksFollowSweepOrder) {
  std::mt19937 rng(61);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const ChainComplex c = testing::random_complex(rng, n, 10);
    for (int l = 1; l <= n; ++l)
      for (int k = l + 1; k <= n; ++k) {
        if (c.deg(l) != c.deg(k) + 1) continue;
        const auto marks = explosion_marks(c, l, k);
        for (auto [a, b] : marks) {
          EXPECT_GT(a, b);
          EXPECT_TRUE(a == k || b == l);
        }
        // Applying the product keeps the complex valid.
        ChainComplex x = c;
        for (auto [a, b] : marks) x = handleslide_map(x, a, b);
        EXPECT_TRUE(is_valid(x));
      }
  }
}

TEST(Moves, RandomSequencesReplay) {
  std::mt19937 rng(62);
  const Subject s = subjects()[1];  // trefoil
  for (int t = 0; t < 20; ++t) {
    Mcs cur = s.mcs;
    std::vector<MoveInstance> journal;
    for (int step = 0; step < 6; ++step) {
      const auto moves = applicable_moves(cur);
      const MoveInstance m = moves[rng() % moves.size()];
      cur = apply_move(cur, m);
      journal.push_back(m);
    }
    EXPECT_EQ(replay(s.mcs, parse_journal(format_journal(journal))).front, cur.front);
  }
}

TEST(Moves, CommuteClassAndSweepOrder) {
  EXPECT_EQ(commute_class(Event::mark(2, 1), Event::mark(4, 3)), 2);
  EXPECT_EQ(commute_class(Event::mark(3, 1), Event::mark(4, 2)), 3);
  EXPECT_EQ(commute_class(Event::mark(4, 1), Event::mark(4, 2)), 4);
  EXPECT_EQ(commute_class(Event::mark(3, 1), Event::mark(4, 1)), 5);
  EXPECT_EQ(commute_class(Event::mark(3, 2), Event::mark(2, 1)), 0);
  EXPECT_EQ(commute_class(Event::mark(3, 2), Event::mark(3, 2)), 0);
  EXPECT_TRUE(sweep_less(Event::mark(3, 1), Event::mark(4, 1)));
  EXPECT_TRUE(sweep_less(Event::mark(4, 1), Event::mark(4, 2)));
}

}  // namespace
}  // namespace legendrian
