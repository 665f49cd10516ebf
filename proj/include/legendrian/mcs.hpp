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

// Ordered chain complexes and Morse complex sequences.
//
// Generators y_1..y_n are the strands of a slice, bottom to top. d.at(k, l)
// with k > l means y_l appears in the boundary of y_k.

#ifndef LEGENDRIAN_MCS_HPP_
#define LEGENDRIAN_MCS_HPP_

#include <string>
#include <vector>

#include "legendrian/front.hpp"
#include "legendrian/gf2.hpp"
#include "legendrian/ruling.hpp"

namespace legendrian {

struct ChainComplex {
  std::vector<int> grading;  // grading[k - 1] is |y_k|
  Mat2 d;

  int n() const { return d.order(); }
  int deg(int k) const { return grading[k - 1]; }
  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

// Strictly lower triangular, d^2 = 0, and d lowers grading by one.
bool is_valid(const ChainComplex& c);
// Z2 homology dimension.
int homology_rank(const ChainComplex& c);

// The elementary handleslide between y_k and y_l, k > l: d' = E d E.
ChainComplex handleslide_map(const ChainComplex& c, int k, int l);
// Exchanges y_k and y_{k+1}; needs <d y_{k+1} | y_k> = 0.
ChainComplex swap_map(const ChainComplex& c, int k);
// Simple birth of y_k, y_{k+1} with |y_{k+1}| = g + 1, |y_k| = g.
ChainComplex birth_map_simple(const ChainComplex& c, int k, int g);
// Death of y_k, y_{k+1}; needs <d y_{k+1} | y_k> = 1.
ChainComplex death_map(const ChainComplex& c, int k);
// The implicit handleslide product used by death_map.
Mat2 death_product(const ChainComplex& c, int k);

struct Mcs {
  MarkedFront front;
  // complexes[e] is the complex left of event e; complexes[size] is empty.
  std::vector<ChainComplex> complexes;
};

// Throws kMcsInvalid naming the first failing event.
Mcs reconstruct(const MarkedFront& front);
// Non-throwing variant; on failure returns false and sets `why`.
bool is_valid_mcs(const MarkedFront& front, std::string* why = nullptr);

struct SimpleForm {
  ChainComplex complex;  // every boundary is zero or a single generator
  Pairing pairing;       // 0 marks an unpaired generator
};

// Unique simple form reached by handleslides.
SimpleForm barannikov_simple_form(const ChainComplex& c);
// Pairing of an acyclic complex; throws kNoPairing otherwise.
Pairing pairing_of(const ChainComplex& c);
bool is_simple(const ChainComplex& c);

NormalRuling ruling_of(const Mcs& mcs);

// Rows of bits (row n first), gradings and pairing, for debugging.
std::string dump(const ChainComplex& c);

}  // namespace legendrian

#endif  // LEGENDRIAN_MCS_HPP_
