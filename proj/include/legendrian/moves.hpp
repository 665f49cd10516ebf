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

// MCS moves as rewrites of the event word.
//
// Every move acts on a window starting at event index `at` and is its own
// inverse up to the direction: the window is matched against one side of
// the move and replaced by the other. Marks are written (k, l) with k > l,
// positions counted bottom to top in the slice holding the mark.
//
//   1      (k,l)(k,l) <-> nothing.               params: k l
//   2..5   m1 m2 <-> m2 m1 for commuting marks:  2 disjoint spans,
//          3 overlapping spans with four distinct endpoints, 4 shared upper
//          endpoint, 5 shared lower endpoint.
//   6      (a,b)(b,c) <-> (b,c)(a,c)(a,b) and its mirror
//          (b,c)(a,b) <-> (a,b)(a,c)(b,c), a > b > c.
//   7..10  a mark passes a crossing at i, relabelled by i <-> i+1:
//          7 away from both crossing strands, 8 lower endpoint on a
//          crossing strand, 9 upper endpoint on a crossing strand,
//          10 straddling the crossing.
//   11..14 a mark passes a cusp at i without touching strands i, i+1:
//          11 below the cusp, 12 above it, 13 straddling it, 14 any mark
//          whose passage changes the implicit handleslides of a right cusp.
//   15     (k,i+1) R<i> <-> R<i>, k > i+1.       params: k
//   16     (i,l) R<i> <-> R<i>, l < i.           params: l
//   17     inserts or removes the product E attached to a pair y_l < y_k
//          with |y_l| = |y_k| + 1 in the complex left of `at`. E lists
//          (k, v) for y_v in d y_l, then (u, l) for y_k in d y_u, in sweep
//          order.                                params: l k
//
// Births are always simple, so the left-cusp mirrors of 15 and 16 are not
// moves here.

#ifndef LEGENDRIAN_MOVES_HPP_
#define LEGENDRIAN_MOVES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legendrian/mcs.hpp"

namespace legendrian {

struct MoveInstance {
  int id = 0;
  std::size_t at = 0;       // first event of the window, 0-based
  std::vector<int> params;  // strand indices, see the table above

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// Journal lines read `#<id> @<event> params...` with a 1-based event index.
std::string journal_line(const MoveInstance& m);
MoveInstance parse_journal_line(std::string_view line);
// Blank lines and lines starting with "//" are skipped.
std::vector<MoveInstance> parse_journal(std::string_view text);
std::string format_journal(const std::vector<MoveInstance>& journal);

// Throws kPatternMismatch if the window matches neither side, kPrecondition
// for a move-17 pair of the wrong degrees. The result is checked for
// locality: complexes outside the window are unchanged.
Mcs apply_move(const Mcs& mcs, const MoveInstance& m);
Mcs replay(const Mcs& mcs, const std::vector<MoveInstance>& journal);
// True iff apply_move would find its pattern; no reconstruction.
bool move_matches(const Mcs& mcs, const MoveInstance& m);

// Every applicable move instance, for randomized testing. Insertions of
// moves 1, 15 and 16 are listed for every legal mark.
std::vector<MoveInstance> applicable_moves(const Mcs& mcs);

// Marks of the move-17 product for the pair l < k in `c`, in window order.
std::vector<std::pair<int, int>> explosion_marks(const ChainComplex& c, int l,
                                                 int k);

// Sweep order: smaller upper endpoint first, then smaller lower endpoint.
bool sweep_less(const Event& a, const Event& b);
// Move id 2..5 for a commuting pair of distinct marks, 0 otherwise.
int commute_class(const Event& a, const Event& b);

}  // namespace legendrian

#endif  // LEGENDRIAN_MOVES_HPP_
