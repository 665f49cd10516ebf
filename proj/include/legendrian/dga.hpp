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

// The Chekanov-Eliashberg algebra of the Ng resolution of a front.

#ifndef LEGENDRIAN_DGA_HPP_
#define LEGENDRIAN_DGA_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "legendrian/front.hpp"

namespace legendrian {

enum class GeneratorKind { kCrossing, kRightCusp };

struct Generator {
  int id = 0;  // 1-based, left to right
  GeneratorKind kind = GeneratorKind::kCrossing;
  int pos = 0;
  int grading = 0;
  std::size_t event = 0;
};

// Letters are generator ids; the empty word is the unit.
using Word = std::vector<int>;

// Z2 linear combination of words. Adding a word twice removes it.
class Poly {
 public:
  void toggle(const Word& w);
  void add(const Poly& p);
  bool contains(const Word& w) const { return terms_.count(w) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<Word>& terms() const { return terms_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::set<Word> terms_;
};

struct ResolvedDGA {
  std::vector<Generator> generators;
  std::vector<Poly> differential;  // aligned with generators

  int size() const { return static_cast<int>(generators.size()); }
  const Generator& gen(int id) const { return generators[id - 1]; }
  const Poly& d(int id) const { return differential[id - 1]; }
};

// Generators only.
std::vector<Generator> resolve(const FrontDiagram& front);

// Every admissible disk with positive corner at `q`, one word per disk in the
// order the disks are found; duplicates are not cancelled.
std::vector<Word> enumerate_disks(const FrontDiagram& front,
                                  const std::vector<Generator>& gens, int q);

ResolvedDGA differential(const FrontDiagram& front);

// Leibniz extension of d to a word.
Poly d_word(const ResolvedDGA& dga, const Word& w);
Poly d_poly(const ResolvedDGA& dga, const Poly& p);
bool check_d_squared(const ResolvedDGA& dga);

std::string word_to_string(const Word& w);
std::string poly_to_string(const Poly& p);

}  // namespace legendrian

#endif  // LEGENDRIAN_DGA_HPP_
