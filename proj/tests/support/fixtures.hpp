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

// Corpus access and random instances shared by the unit and acceptance tests.

#ifndef LEGENDRIAN_TESTS_FIXTURES_HPP_
#define LEGENDRIAN_TESTS_FIXTURES_HPP_

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "legendrian/error.hpp"
#include "legendrian/front.hpp"
#include "legendrian/mcs.hpp"

#ifndef LEGENDRIAN_CORPUS_DIR
#error "LEGENDRIAN_CORPUS_DIR must point at corpus/"
#endif

namespace legendrian::testing {

struct CorpusFront {
  std::string name;
  MarkedFront front;
};

inline std::string read_corpus_file(const std::string& relative) {
  std::ifstream in(std::string(LEGENDRIAN_CORPUS_DIR) + "/" + relative);
  if (!in) throw std::runtime_error("missing corpus file " + relative);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The unmarked corpus, smallest first.
inline std::vector<CorpusFront> corpus_fronts() {
  std::vector<CorpusFront> out;
  for (const char* name : {"unknot", "trefoil", "twobridge5", "twobridge7",
                           "twobridge9", "threecusp"})
    out.push_back({name, parse_front(read_corpus_file(std::string(name) + ".front"))});
  return out;
}

// Corpus fronts with at most two left cusps.
inline std::vector<CorpusFront> counting_fronts() {
  std::vector<CorpusFront> out;
  for (auto& c : corpus_fronts())
    if (c.front.left_cusp_count() <= 2) out.push_back(c);
  return out;
}

// A random knot front with `cusps` left cusps, or an empty front when the
// attempt does not close into a valid knot.
inline bool random_front(std::mt19937& rng, int cusps, int max_events,
                         MarkedFront& out) {
  std::vector<Event> ev;
  int n = 0, born = 0;
  for (int step = 0; step < max_events; ++step) {
    const int r = static_cast<int>(rng() % 10);
    if (born < cusps && (n == 0 || r < 2)) {
      ev.push_back(Event::left_cusp(1 + static_cast<int>(rng() % (n + 1))));
      n += 2;
      ++born;
    } else if (n >= 2 && born == cusps && r < 3) {
      ev.push_back(Event::right_cusp(1 + static_cast<int>(rng() % (n - 1))));
      n -= 2;
      if (n == 0) break;
    } else if (n >= 2) {
      ev.push_back(Event::crossing(1 + static_cast<int>(rng() % (n - 1))));
    }
  }
  if (n != 0 || born != cusps) return false;
  try {
    out = MarkedFront(std::move(ev));
    return true;
  } catch (const Error&) {
    return false;
  }
}

// A random valid ordered chain complex of order n: a random pairing, then
// random grading-preserving handleslides.
inline ChainComplex random_complex(std::mt19937& rng, int n, int slides) {
  std::vector<int> g(n);
  for (int& x : g) x = static_cast<int>(rng() % 3);
  ChainComplex c{g, Mat2(n)};
  std::vector<bool> used(n + 1, false);
  for (int u = n; u >= 1; --u)
    for (int l = u - 1; l >= 1; --l)
      if (!used[u] && !used[l] && g[u - 1] == g[l - 1] + 1 && rng() % 2) {
        c.d.set(u, l, true);
        used[u] = used[l] = true;
      }
  for (int s = 0; s < slides && n >= 2; ++s) {
    const int k = 1 + static_cast<int>(rng() % n);
    const int l = 1 + static_cast<int>(rng() % n);
    if (k > l && g[k - 1] == g[l - 1]) c = handleslide_map(c, k, l);
  }
  return c;
}

}  // namespace legendrian::testing

#endif  // LEGENDRIAN_TESTS_FIXTURES_HPP_
