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

// Dipped resolutions, evaluated through local matrix equations.
//
// A dipped diagram alternates inserts and dips: I_1 D_1 I_2 ... D_m I_{m+1}.
// Every insert holds at most one feature of the front. Dip j carries the
// a-lattice A_j and b-lattice B_j, strictly lower triangular in the strand
// labels of that dip, bottom to top. Across a cusp insert, labels skip the
// cusp strands, so matrices are stored compressed.
//
// Nothing here enumerates disks: the oracle relies only on the boundary
// formulas dA = A^2, dB = (I + B)A + Ã(I + B), dq = a^{i+1,i}, and
// dz = 1 + a^{i+1,i}.

#ifndef LEGENDRIAN_DIPPED_HPP_
#define LEGENDRIAN_DIPPED_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/augmentation.hpp"
#include "legendrian/dga.hpp"
#include "legendrian/gf2.hpp"
#include "legendrian/mcs.hpp"

namespace legendrian {

enum class InsertKind { kParallel, kCrossing, kRightCusp, kLeftCusp };

struct Insert {
  InsertKind kind = InsertKind::kParallel;
  int pos = 0;      // lower strand of the feature, left-slice label
  int grading = 0;  // of the crossing q; right cusps z have grading 1

  friend bool operator==(const Insert&, const Insert&) = default;
};

struct DippedDiagram {
  std::vector<Insert> inserts;               // I_1 .. I_{m+1}
  std::vector<std::vector<int>> potentials;  // per dip, bottom to top

  std::size_t dips() const { return potentials.size(); }
  // Strand count at dip j, 1-based; dip 0 is the empty slice left of I_1.
  int dim(std::size_t j) const {
    return j == 0 ? 0 : static_cast<int>(potentials[j - 1].size());
  }
};

// Throws kDimension unless the inserts and dips fit together.
void validate(const DippedDiagram& d);

// Values of the a- and b-lattices of every dip and of the crossing in each
// insert. Also used for homotopies, which take values on the same crossings.
struct DipValuation {
  std::vector<Mat2> A, B;     // index j-1 for dip j
  std::vector<bool> inserts;  // index s-1 for insert s; false if no crossing

  friend bool operator==(const DipValuation&, const DipValuation&) = default;
};

DipValuation zero_valuation(const DippedDiagram& d);

// Ã_{j-1}, evaluated under `v`; same order as dip j. j = 1 gives H_{2,1}.
Mat2 a_tilde(const DippedDiagram& d, const DipValuation& v, std::size_t j);

// All four families of augmentation equations, plus gradings.
bool check_dipped_augmentation(const DippedDiagram& d, const DipValuation& v);
// The first failed equation, or empty.
std::string explain_dipped_augmentation(const DippedDiagram& d,
                                        const DipValuation& v);

struct DippedAugmentation {
  DippedDiagram diagram;
  DipValuation valuation;
};

// One dip right of every event, the last one empty: A_j is the complex right
// of event j, B_j = H_{k,l} right of a mark (k, l), inserts valued 0.
DippedAugmentation mcs_to_dipped_aug(const Mcs& mcs);
// Reads the MCS back: the marks are the B-lattices of parallel inserts.
Mcs dipped_aug_to_mcs(const DippedAugmentation& da);
// Occ-simple, and every parallel insert has B = H_{k,l}.
bool is_minimal_occ_simple(const DippedDiagram& d, const DipValuation& v);

// Adds a dip right after the feature of insert `site` (1-based; m+1 is the
// last insert). The new dip has B = 0 and A = Ã; the rest of the insert
// becomes a parallel insert in front of the old dip `site`.
DippedAugmentation extend_by_zero(const DippedAugmentation& da,
                                  std::size_t site);

struct HandleslideExtension {
  DippedAugmentation result;
  bool crossing_value = false;  // new value of the crossing at `site`
};
// Insert `site` holds a grading-0 crossing at i; a new dip goes just left of
// it with B = H_{i+1,i}, A = E_{i+1,i} A E_{i+1,i}, and the crossing value
// flips. Throws kPrecondition otherwise.
HandleslideExtension extend_by_handleslide(const DippedAugmentation& da,
                                           std::size_t site);

// Dips an augmentation of the plain resolution event by event, using
// extend_by_handleslide in front of every augmented crossing and
// extend_by_zero everywhere else.
DippedAugmentation dip_augmentation(const FrontDiagram& plain,
                                    const ResolvedDGA& dga,
                                    const Augmentation& e);

// The homotopy equations between e1 and e2 with the support condition.
bool check_dipped_homotopy(const DippedDiagram& d, const DipValuation& e1,
                           const DipValuation& e2, const DipValuation& h);

struct HomotopySearch {
  std::optional<DipValuation> homotopy;
  // Without a homotopy: equations whose sum reads 0 = 1.
  std::vector<std::string> contradiction;
  int unknowns = 0;
};

// Solves the homotopy equations, which are linear in h.
HomotopySearch find_dipped_homotopy(const DippedDiagram& d,
                                    const DipValuation& e1,
                                    const DipValuation& e2);
// Same question by trying every h; kPrecondition past `max_unknowns`.
std::optional<DipValuation> find_dipped_homotopy_exhaustive(
    const DippedDiagram& d, const DipValuation& e1, const DipValuation& e2,
    int max_unknowns = 22);

// Two MCSs on one front as augmentations of a common dipped diagram: gaps
// of the shorter one are padded with extend_by_zero.
struct AlignedPair {
  DippedDiagram diagram;
  DipValuation first, second;
};
AlignedPair align(const Mcs& a, const Mcs& b);

}  // namespace legendrian

#endif  // LEGENDRIAN_DIPPED_HPP_
