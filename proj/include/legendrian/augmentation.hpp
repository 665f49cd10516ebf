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

// Z2 augmentations of a resolved DGA and their chain homotopy classes.

#ifndef LEGENDRIAN_AUGMENTATION_HPP_
#define LEGENDRIAN_AUGMENTATION_HPP_

#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/gf2.hpp"

namespace legendrian {

// Value per generator, indexed by id - 1.
using Augmentation = std::vector<bool>;

bool eval_word(const Augmentation& e, const Word& w);
bool eval_poly(const Augmentation& e, const Poly& p);

// Grading and e(d q) = 0 for every q.
bool is_augmentation(const ResolvedDGA& dga, const Augmentation& e);

// All augmentations, lexicographically sorted (false < true, id order).
std::vector<Augmentation> enumerate_augmentations(const ResolvedDGA& dga);

// Unknown j is h(minus_one[j]).
struct HomotopySystem {
  std::vector<int> minus_one;  // generator ids of grading -1
  Gf2System system{0};
};

HomotopySystem homotopy_system(const ResolvedDGA& dga, const Augmentation& e1,
                               const Augmentation& e2);
bool is_chain_homotopic(const ResolvedDGA& dga, const Augmentation& e1,
                        const Augmentation& e2);

struct AugmentationClasses {
  std::vector<Augmentation> augmentations;  // sorted
  // Each class lists indices into `augmentations`, ascending; classes are
  // ordered by their first (lexicographically least) member.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
  const Augmentation& representative(int c) const {
    return augmentations[classes[c].front()];
  }
};

// `jobs` > 1 runs the homotopy tests on that many threads; the result does
// not depend on it.
AugmentationClasses partition_classes(const ResolvedDGA& dga, int jobs = 1);

// Index of the class containing `e` (which need not be the representative).
int class_index(const ResolvedDGA& dga, const AugmentationClasses& classes,
                const Augmentation& e);

}  // namespace legendrian

#endif  // LEGENDRIAN_AUGMENTATION_HPP_
