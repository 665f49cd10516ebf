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

#include "legendrian/augmentation.hpp"

#include <algorithm>
#include <thread>

#include "legendrian/error.hpp"

namespace legendrian {

bool eval_word(const Augmentation& e, const Word& w) {
  for (int q : w)
    if (!e[q - 1]) return false;
  return true;
}

bool eval_poly(const Augmentation& e, const Poly& p) {
  bool v = false;
  for (const Word& w : p.terms()) v ^= eval_word(e, w);
  return v;
}

bool is_augmentation(const ResolvedDGA& dga, const Augmentation& e) {
  if (static_cast<int>(e.size()) != dga.size()) return false;
  for (const Generator& g : dga.generators) {
    if (e[g.id - 1] && g.grading != 0) return false;
    if (eval_poly(e, dga.d(g.id))) return false;
  }
  return true;
}

namespace {

// d q only mentions generators left of q, so q's constraint is checkable as
// soon as q is reached.
void extend(const ResolvedDGA& dga, Augmentation& e, int id,
            std::vector<Augmentation>& out) {
  if (id > dga.size()) {
    out.push_back(e);
    return;
  }
  const Generator& g = dga.gen(id);
  if (eval_poly(e, dga.d(id))) return;
  e[id - 1] = false;
  extend(dga, e, id + 1, out);
  if (g.grading == 0) {
    e[id - 1] = true;
    extend(dga, e, id + 1, out);
    e[id - 1] = false;
  }
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const ResolvedDGA& dga) {
  std::vector<Augmentation> out;
  Augmentation e(dga.size(), false);
  extend(dga, e, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

HomotopySystem homotopy_system(const ResolvedDGA& dga, const Augmentation& e1,
                               const Augmentation& e2) {
  HomotopySystem hs;
  std::vector<int> unknown_of(dga.size() + 1, -1);
  for (const Generator& g : dga.generators) {
    if (g.grading == -1) {
      unknown_of[g.id] = static_cast<int>(hs.minus_one.size());
      hs.minus_one.push_back(g.id);
    }
  }
  hs.system = Gf2System(static_cast<int>(hs.minus_one.size()));
  for (const Generator& g : dga.generators) {
    std::vector<int> vars;
    for (const Word& w : dga.d(g.id).terms()) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int u = unknown_of[w[i]];
        if (u < 0) continue;
        bool coeff = true;
        for (std::size_t j = 0; j < i && coeff; ++j) coeff = e1[w[j] - 1];
        for (std::size_t j = i + 1; j < w.size() && coeff; ++j)
          coeff = e2[w[j] - 1];
        if (coeff) vars.push_back(u);
      }
    }
    const bool rhs = e1[g.id - 1] != e2[g.id - 1];
    if (vars.empty() && !rhs) continue;
    hs.system.add_equation(vars, rhs);
  }
  return hs;
}

bool is_chain_homotopic(const ResolvedDGA& dga, const Augmentation& e1,
                        const Augmentation& e2) {
  return homotopy_system(dga, e1, e2).system.solve().has_value();
}

AugmentationClasses partition_classes(const ResolvedDGA& dga, int jobs) {
  AugmentationClasses out;
  out.augmentations = enumerate_augmentations(dga);
  const auto& augs = out.augmentations;
  out.class_of.assign(augs.size(), -1);
  jobs = std::max(1, jobs);
  // Homotopy is an equivalence relation, so comparing against each class's
  // first member suffices.
  for (std::size_t a = 0; a < augs.size(); ++a) {
    const std::size_t n = out.classes.size();
    std::vector<char> hit(n, 0);
    auto work = [&](std::size_t begin) {
      for (std::size_t c = begin; c < n; c += static_cast<std::size_t>(jobs))
        hit[c] = is_chain_homotopic(dga, augs[out.classes[c].front()], augs[a]);
    };
    if (jobs == 1 || n < 2) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
      for (auto& t : pool) t.join();
    }
    const auto it = std::find(hit.begin(), hit.end(), 1);
    if (it == hit.end()) {
      out.class_of[a] = static_cast<int>(n);
      out.classes.push_back({static_cast<int>(a)});
    } else {
      const int c = static_cast<int>(it - hit.begin());
      out.class_of[a] = c;
      out.classes[c].push_back(static_cast<int>(a));
    }
  }
  return out;
}

int class_index(const ResolvedDGA& dga, const AugmentationClasses& classes,
                const Augmentation& e) {
  for (int c = 0; c < classes.count(); ++c)
    if (is_chain_homotopic(dga, classes.representative(c), e)) return c;
  fail(ErrorCode::kInternal, "augmentation outside every class");
}

}  // namespace legendrian
