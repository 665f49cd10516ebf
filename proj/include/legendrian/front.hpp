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

// Front projections as event words.
//
// Strand positions are 1-based and counted bottom-to-top in the slice where
// the event happens. A left cusp at i creates strands i and i+1, a right cusp
// at i joins i and i+1, a crossing at i exchanges i and i+1, and a mark (k,l)
// is a handleslide between strands k > l.

#ifndef LEGENDRIAN_FRONT_HPP_
#define LEGENDRIAN_FRONT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace legendrian {

enum class EventKind { kLeftCusp, kRightCusp, kCrossing, kMark };

struct Event {
  EventKind kind = EventKind::kCrossing;
  int pos = 0;    // cusp / crossing position; upper strand for marks
  int lower = 0;  // marks only

  static Event left_cusp(int i) { return {EventKind::kLeftCusp, i, 0}; }
  static Event right_cusp(int i) { return {EventKind::kRightCusp, i, 0}; }
  static Event crossing(int i) { return {EventKind::kCrossing, i, 0}; }
  static Event mark(int k, int l) { return {EventKind::kMark, k, l}; }

  bool is_mark() const { return kind == EventKind::kMark; }
  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

std::string to_token(const Event& e);

// Strand bookkeeping for a validated front. `before[e]` lists the strand ids
// at the slice immediately left of event e, bottom to top; `before[size]` is
// the empty final slice.
struct Trace {
  int strand_count = 0;             // number of cusp-to-cusp strands
  std::vector<std::vector<int>> before;
  std::vector<int> potential;       // Maslov potential per strand, min 0
  int components = 0;

  int width(std::size_t e) const { return static_cast<int>(before[e].size()); }
  // Potentials bottom to top at the slice left of event e.
  std::vector<int> slice_potential(std::size_t e) const;
  // Potentials bottom to top at the slice right of event e.
  std::vector<int> slice_potential_after(std::size_t e) const {
    return slice_potential(e + 1);
  }
};

// A front, possibly carrying handleslide marks. Immutable once built.
class MarkedFront {
 public:
  MarkedFront() = default;
  // Validates everything: positions, closure, knot-ness, potential, marks.
  explicit MarkedFront(std::vector<Event> events);

  const std::vector<Event>& events() const { return events_; }
  const Trace& trace() const { return trace_; }
  std::size_t size() const { return events_.size(); }
  const Event& operator[](std::size_t e) const { return events_[e]; }

  // The same front with every mark removed.
  MarkedFront underlying() const;
  bool has_marks() const;
  int mark_count() const;
  int left_cusp_count() const;

  std::string serialize() const;

  friend bool operator==(const MarkedFront& a, const MarkedFront& b) {
    return a.events_ == b.events_;
  }

 private:
  std::vector<Event> events_;
  Trace trace_;
};

using FrontDiagram = MarkedFront;

// Parses `L<i> R<i> X<i> H<k>,<l>` tokens; '#' starts a comment line.
MarkedFront parse_front(std::string_view text);

// Structural checks only (positions and closure); no potential or marks.
// Returns the strand bookkeeping with potentials left empty.
Trace trace_events(const std::vector<Event>& events);

bool is_two_bridge(const FrontDiagram& front);

// Positions of crossings / right cusps that become DGA generators, in event
// order.
std::vector<std::size_t> generator_events(const FrontDiagram& front);

}  // namespace legendrian

#endif  // LEGENDRIAN_FRONT_HPP_
