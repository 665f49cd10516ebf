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

// Graded normal rulings.

#ifndef LEGENDRIAN_RULING_HPP_
#define LEGENDRIAN_RULING_HPP_

#include <cstddef>
#include <vector>

#include "legendrian/front.hpp"

namespace legendrian {

// Pairing on positions 1..n of one slice: pair[p] is the companion of p.
// Index 0 is unused.
using Pairing = std::vector<int>;

enum class CrossingTag { kSwitch, kDeparture, kReturn };

struct CrossingClass {
  std::size_t event = 0;
  int crossing = 0;  // 1-based among crossings, left to right
  CrossingTag tag = CrossingTag::kSwitch;
  bool graded = false;
};

struct NormalRuling {
  std::vector<int> switches;      // crossing numbers, ascending
  std::vector<Pairing> pairings;  // pairings[e] is the slice left of event e
  std::vector<CrossingClass> classification;

  bool is_switch(int crossing) const;
};

// Crossing numbers are 1-based among the Crossing events in order.
std::vector<std::size_t> crossing_events(const FrontDiagram& front);
int crossing_grading(const FrontDiagram& front, std::size_t event);

// Pairing on the slice right of event e given the slice left of it.
// Returns false when the ruling cannot continue (a right cusp on unpaired
// strands, companions meeting at a crossing, or an illegal switch).
bool advance_pairing(const FrontDiagram& front, std::size_t e, bool switched,
                     const Pairing& left, Pairing& right);

// Normality of a switch at crossing position i given the pairing left of it.
bool switch_is_normal(const Pairing& p, int i);

// All graded normal rulings, sorted by switch set.
std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& front);

// Builds the ruling with the given switch set; nullopt-like failure is an
// error of kind kPrecondition.
NormalRuling ruling_from_switches(const FrontDiagram& front,
                                  const std::vector<int>& switches);

std::vector<CrossingClass> classify_crossings(const FrontDiagram& front,
                                              const NormalRuling& ruling);

// Departure-return pairs are only tracked with at most two left cusps; the
// one-cusp case has none.
bool nu_defined(const FrontDiagram& front);
// Graded departure-return pairs; kNotTwoBridge past two left cusps.
int nu(const FrontDiagram& front, const NormalRuling& ruling);

struct RulingSummary {
  std::vector<NormalRuling> rulings;
  bool nu_defined = false;
  std::vector<int> nu;  // empty unless nu_defined
  long long total = 0;  // sum of 2^nu; 0 unless nu_defined
};

RulingSummary summarize_rulings(const FrontDiagram& front);

}  // namespace legendrian

#endif  // LEGENDRIAN_RULING_HPP_
