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

#include "legendrian/mcs.hpp"

#include "legendrian/error.hpp"

namespace legendrian {

bool is_valid(const ChainComplex& c) {
  if (static_cast<int>(c.grading.size()) != c.n()) return false;
  if (!c.d.is_strictly_lower() || !(c.d * c.d).is_zero()) return false;
  for (auto [k, l] : c.d.ones())
    if (c.deg(k) != c.deg(l) + 1) return false;
  return true;
}

int homology_rank(const ChainComplex& c) {
  // dim H = n - 2 rank(d).
  Gf2System rows(c.n());
  for (int k = 1; k <= c.n(); ++k) {
    std::vector<int> vars;
    for (int l = 1; l <= c.n(); ++l)
      if (c.d.at(k, l)) vars.push_back(l - 1);
    rows.add_equation(vars, false);
  }
  return c.n() - 2 * rows.rank();
}

ChainComplex handleslide_map(const ChainComplex& c, int k, int l) {
  if (!(k > l && l >= 1 && k <= c.n()))
    fail(ErrorCode::kPrecondition, "handleslide indices out of range");
  if (c.deg(k) != c.deg(l))
    fail(ErrorCode::kMarkPotential, "handleslide between different gradings");
  const Mat2 e = Mat2::elementary(c.n(), k, l);
  return {c.grading, e * c.d * e};
}

ChainComplex swap_map(const ChainComplex& c, int k) {
  if (!(k >= 1 && k < c.n()))
    fail(ErrorCode::kPrecondition, "swap position out of range");
  if (c.d.at(k + 1, k))
    fail(ErrorCode::kMcsInvalid, "crossing between generators joined by d");
  const Mat2 p = Mat2::transposition(c.n(), k);
  ChainComplex out{c.grading, p * c.d * p};
  std::swap(out.grading[k - 1], out.grading[k]);
  return out;
}

ChainComplex birth_map_simple(const ChainComplex& c, int k, int g) {
  if (!(k >= 1 && k <= c.n() + 1))
    fail(ErrorCode::kPrecondition, "birth position out of range");
  ChainComplex out{c.grading, c.d.insert_pair(k)};
  out.grading.insert(out.grading.begin() + (k - 1), {g, g + 1});
  out.d.set(k + 1, k, true);
  return out;
}

Mat2 death_product(const ChainComplex& c, int k) {
  // Clears d y_{k+1} down to y_k and every other boundary of y_k's
  // coefficient, making {y_k, y_{k+1}} a direct summand. The factors
  // commute.
  Mat2 e = Mat2::identity(c.n());
  for (int v = 1; v < k; ++v)
    if (c.d.at(k + 1, v)) e.flip(k, v);
  for (int u = k + 2; u <= c.n(); ++u)
    if (c.d.at(u, k)) e.flip(u, k + 1);
  return e;
}

ChainComplex death_map(const ChainComplex& c, int k) {
  if (!(k >= 1 && k < c.n()))
    fail(ErrorCode::kPrecondition, "death position out of range");
  if (!c.d.at(k + 1, k))
    fail(ErrorCode::kMcsInvalid, "right cusp on generators not joined by d");
  const Mat2 e = death_product(c, k);
  const Mat2 split = e * c.d * e;
  for (int j = 1; j <= c.n(); ++j) {
    if (j != k) ensure(!split.at(k + 1, j), "death split");
    if (j != k + 1) ensure(!split.at(j, k), "death split");
    ensure(!split.at(k, j) && !split.at(j, k + 1), "death split");
  }
  ChainComplex out{c.grading, split.delete_pair(k)};
  out.grading.erase(out.grading.begin() + (k - 1),
                    out.grading.begin() + (k + 1));
  return out;
}

namespace {

std::string at_event(const MarkedFront& f, std::size_t e) {
  return "event " + std::to_string(e + 1) + " (" + to_token(f[e]) + ")";
}

}  // namespace

bool is_valid_mcs(const MarkedFront& front, std::string* why) {
  try {
    reconstruct(front);
    return true;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kMcsInvalid) throw;
    if (why) *why = err.what();
    return false;
  }
}

Mcs reconstruct(const MarkedFront& front) {
  Mcs m;
  m.front = front;
  m.complexes.reserve(front.size() + 1);
  m.complexes.push_back({{}, Mat2(0)});
  const Trace& tr = front.trace();
  for (std::size_t e = 0; e < front.size(); ++e) {
    const Event& ev = front[e];
    const ChainComplex& c = m.complexes.back();
    ChainComplex next;
    try {
      switch (ev.kind) {
        case EventKind::kLeftCusp:
          next = birth_map_simple(c, ev.pos,
                                  tr.slice_potential_after(e)[ev.pos - 1]);
          break;
        case EventKind::kRightCusp:
          next = death_map(c, ev.pos);
          break;
        case EventKind::kCrossing:
          next = swap_map(c, ev.pos);
          break;
        case EventKind::kMark:
          next = handleslide_map(c, ev.pos, ev.lower);
          break;
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kInternal) throw;
      fail(ErrorCode::kMcsInvalid, at_event(front, e) + ": " + err.what());
    }
    ensure(next.grading == tr.slice_potential_after(e), "complex gradings");
    m.complexes.push_back(std::move(next));
  }
  return m;
}

SimpleForm barannikov_simple_form(const ChainComplex& c) {
  // Generators below k are already simple. Handleslides (k, k') clear the
  // pivot of d y_k while it is an earlier target; the surviving pivot l is
  // paired with k and handleslides (l, l') clear the rest of d y_k.
  ChainComplex s = c;
  const int n = c.n();
  Pairing pair(n + 1, 0);
  std::vector<int> source_of(n + 1, 0);  // target -> source
  for (int k = 1; k <= n; ++k) {
    int pivot = 0;
    for (;;) {
      pivot = 0;
      for (int l = k - 1; l >= 1; --l)
        if (s.d.at(k, l)) {
          pivot = l;
          break;
        }
      if (pivot == 0 || source_of[pivot] == 0) break;
      s = handleslide_map(s, k, source_of[pivot]);
    }
    if (pivot == 0) continue;
    ensure(pair[pivot] == 0, "simple form pivot already paired");
    for (int l = 1; l < pivot; ++l)
      if (s.d.at(k, l)) s = handleslide_map(s, pivot, l);
    pair[k] = pivot;
    pair[pivot] = k;
    source_of[pivot] = k;
  }
  ensure(is_simple(s), "simple form");
  return {std::move(s), std::move(pair)};
}

Pairing pairing_of(const ChainComplex& c) {
  SimpleForm sf = barannikov_simple_form(c);
  for (int k = 1; k <= c.n(); ++k)
    if (sf.pairing[k] == 0)
      fail(ErrorCode::kNoPairing,
           "generator y" + std::to_string(k) + " is unpaired");
  return sf.pairing;
}

bool is_simple(const ChainComplex& c) {
  std::vector<int> hits(c.n() + 1, 0);
  for (int k = 1; k <= c.n(); ++k) {
    int row = 0;
    for (int l = 1; l <= c.n(); ++l)
      if (c.d.at(k, l)) {
        ++row;
        ++hits[l];
      }
    if (row > 1) return false;
  }
  for (int l = 1; l <= c.n(); ++l)
    if (hits[l] > 1) return false;
  return true;
}

NormalRuling ruling_of(const Mcs& mcs) {
  const MarkedFront& f = mcs.front;
  std::vector<int> switches;
  int crossing = 0;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (f[e].kind != EventKind::kCrossing) continue;
    ++crossing;
    const Pairing left = pairing_of(mcs.complexes[e]);
    const Pairing right = pairing_of(mcs.complexes[e + 1]);
    if (left == right) switches.push_back(crossing);
  }
  const MarkedFront plain = f.underlying();
  NormalRuling r = ruling_from_switches(plain, switches);
  // Same pairings slice by slice, marks skipped.
  std::size_t p = 0;
  for (std::size_t e = 0; e <= f.size(); ++e) {
    if (e < f.size() && f[e].is_mark()) continue;
    ensure(r.pairings[p] == pairing_of(mcs.complexes[e]),
           "ruling pairing differs from the MCS pairing");
    ++p;
  }
  return r;
}

std::string dump(const ChainComplex& c) {
  std::string s = c.d.dump();
  s += "\ngrading:";
  for (int g : c.grading) s += " " + std::to_string(g);
  SimpleForm sf = barannikov_simple_form(c);
  s += "\npairing:";
  for (int k = 1; k <= c.n(); ++k) s += " " + std::to_string(sf.pairing[k]);
  return s;
}

}  // namespace legendrian
