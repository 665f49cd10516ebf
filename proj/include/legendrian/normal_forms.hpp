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

// Sweeping handleslide marks and the normal forms built on it.

#ifndef LEGENDRIAN_NORMAL_FORMS_HPP_
#define LEGENDRIAN_NORMAL_FORMS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "legendrian/augmentation.hpp"
#include "legendrian/dga.hpp"
#include "legendrian/mcs.hpp"
#include "legendrian/moves.hpp"
#include "legendrian/ruling.hpp"

namespace legendrian {

// A block V of marks occupying events [begin, end) of an MCS, moved around
// by MCS moves only. Every move is applied (and so locality-checked) and
// recorded in the journal; a move that undoes the previous one cancels it.
class Sweeper {
 public:
  explicit Sweeper(Mcs mcs) : mcs_(std::move(mcs)) {}

  const Mcs& mcs() const { return mcs_; }
  const std::vector<MoveInstance>& journal() const { return journal_; }
  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }
  // Marks of V as (k, l), in order.
  std::vector<std::pair<int, int>> marks() const;
  // V's product I + N in the slice of V: N(k, l) = v_{k,l}.
  Mat2 product() const;

  void apply(const MoveInstance& m);
  // Places an empty V at gap `at`.
  void start(std::size_t at);
  // V becomes [begin, end) and is re-sorted.
  void reset_begin(std::size_t begin);

  // Move II: the mark right of V joins it.
  void absorb_right();
  // Move I in reverse: moves (k, l) to the left end of V; V shrinks to
  // exclude it. Requires v_{k,l} = 1.
  void extract_left(int k, int l);
  // Move III: V passes the crossing right of it; needs v_{i+1,i} = 0.
  void pass_crossing();
  // V passes the left cusp right of it.
  void pass_left_cusp();
  // Move IV, extended: clears every mark of V touching the cusp strands of
  // the right cusp right of V, then passes the cusp.
  void pass_right_cusp();
  // Restores the sweep order of V with moves 1-6.
  void sort();

  // Inserts the pair (k,l)(k,l) at gap `at` with move 1.
  void insert_pair(std::size_t at, int k, int l);

 private:
  const Event& ev(std::size_t j) const { return mcs_.front[j]; }
  void commute_or_triangle(std::size_t at);

  Mcs mcs_;
  std::vector<MoveInstance> journal_;
  // Front before the last journal entry, one per entry.
  std::vector<MarkedFront> before_;
  std::size_t begin_ = 0, end_ = 0;
};

struct NormalForm {
  Mcs mcs;
  std::vector<MoveInstance> journal;  // replays the input into `mcs`
};

// Marks only at simple switches and marked returns, simple complexes away
// from them.
NormalForm sr_bar_form(const Mcs& mcs);
bool is_sr_bar_form(const Mcs& mcs);

// A single mark (i+1, i) immediately left of some crossings, none elsewhere.
NormalForm a_form(const Mcs& mcs);
bool is_a_form(const Mcs& mcs);

// The augmentation of an A-form MCS: marked crossings are augmented.
Augmentation a_form_augmentation(const Mcs& mcs, const ResolvedDGA& dga);

struct PsiValue {
  Augmentation augmentation;  // read off the A-form
  int class_index = -1;       // into the given partition
};

// Throws kInternal if the A-form does not give an augmentation.
PsiValue psi(const Mcs& mcs, const ResolvedDGA& dga,
             const AugmentationClasses& classes);

// One mark (i+1, i) immediately left of every augmented crossing.
Mcs aug_to_mcs(const Augmentation& e, const FrontDiagram& front,
               const ResolvedDGA& dga);

// The S R-bar form MCS of a ruling with the given graded returns marked
// (crossing numbers, 1-based).
Mcs sr_bar_from_ruling(const FrontDiagram& front, const NormalRuling& ruling,
                       const std::vector<int>& marked_returns);
// Graded returns of a ruling, as crossing numbers.
std::vector<int> graded_returns(const FrontDiagram& front,
                                const NormalRuling& ruling);
// Crossing numbers of marked returns in an S R-bar form MCS.
std::vector<int> marked_returns(const Mcs& mcs);

// 2-bridge only (kNotTwoBridge otherwise).
NormalForm srg_form(const Mcs& mcs);
bool equivalent_2bridge(const Mcs& a, const Mcs& b);

}  // namespace legendrian

#endif  // LEGENDRIAN_NORMAL_FORMS_HPP_
