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

#include "legendrian/dipped.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

// Ã is built symbolically so that a homotopy can act on it as a
// derivation. An atom is a^{r,c} of the dip left of the insert, or the
// insert's own crossing.
struct Atom {
  bool is_insert = false;
  int r = 0, c = 0;
};
using Mono = std::vector<Atom>;   // product; empty is 1
using Entry = std::vector<Mono>;  // sum

struct Tilde {
  int n = 0;
  std::vector<Entry> entries;  // (u, v) at (u - 1) * n + (v - 1)

  Entry& at(int u, int v) { return entries[(u - 1) * n + (v - 1)]; }
  const Entry& at(int u, int v) const {
    return entries[(u - 1) * n + (v - 1)];
  }
};

Atom a(int r, int c) { return {false, r, c}; }
Atom x() { return {true, 0, 0}; }

int width_after(const Insert& ins, int p) {
  switch (ins.kind) {
    case InsertKind::kParallel:
    case InsertKind::kCrossing:
      return p;
    case InsertKind::kRightCusp:
      return p - 2;
    case InsertKind::kLeftCusp:
      return p + 2;
  }
  return p;
}

void check_insert(const Insert& ins, int p) {
  const int i = ins.pos;
  bool ok = true;
  switch (ins.kind) {
    case InsertKind::kParallel:
      break;
    case InsertKind::kCrossing:
    case InsertKind::kRightCusp:
      ok = i >= 1 && i + 1 <= p;
      break;
    case InsertKind::kLeftCusp:
      ok = i >= 1 && i <= p + 1;
      break;
  }
  if (!ok)
    fail(ErrorCode::kDimension, "insert position " + std::to_string(i) +
                                    " does not fit " + std::to_string(p) +
                                    " strands");
}

// Ã for an insert entered from a dip with p strands.
Tilde tilde(const Insert& ins, int p) {
  check_insert(ins, p);
  Tilde t;
  t.n = width_after(ins, p);
  t.entries.assign(static_cast<std::size_t>(t.n) * t.n, {});
  const int i = ins.pos;
  switch (ins.kind) {
    case InsertKind::kParallel:
      for (int u = 1; u <= t.n; ++u)
        for (int v = 1; v < u; ++v) t.at(u, v) = {{a(u, v)}};
      break;
    case InsertKind::kCrossing:
      for (int u = 1; u <= t.n; ++u)
        for (int v = 1; v < u; ++v) {
          const bool u_in = u == i || u == i + 1, v_in = v == i || v == i + 1;
          if (!u_in && !v_in) {
            t.at(u, v) = {{a(u, v)}};
          } else if (u == i + 1 && v == i) {
            // stays 0
          } else if (u == i + 1) {
            t.at(u, v) = {{a(i, v)}};
          } else if (u == i) {
            t.at(u, v) = {{a(i + 1, v)}, {x(), a(i, v)}};
          } else if (v == i) {
            t.at(u, v) = {{a(u, i + 1)}};
          } else {
            t.at(u, v) = {{a(u, i)}, {a(u, i + 1), x()}};
          }
        }
      break;
    case InsertKind::kRightCusp: {
      // New label w is old label w or w + 2.
      auto old = [i](int w) { return w < i ? w : w + 2; };
      for (int u = 1; u <= t.n; ++u)
        for (int v = 1; v < u; ++v) {
          const int U = old(u), V = old(v);
          if (U < i || V > i + 1) {
            t.at(u, v) = {{a(U, V)}};
          } else {
            t.at(u, v) = {{a(U, V)},
                          {a(U, i), a(i + 1, V)},
                          {a(U, i + 1), x(), a(i + 1, V)},
                          {a(U, i), x(), a(i, V)},
                          {a(U, i + 1), x(), x(), a(i, V)}};
          }
        }
      break;
    }
    case InsertKind::kLeftCusp: {
      auto old = [i](int w) { return w < i ? w : w - 2; };
      for (int u = 1; u <= t.n; ++u)
        for (int v = 1; v < u; ++v) {
          const bool u_in = u == i || u == i + 1, v_in = v == i || v == i + 1;
          if (!u_in && !v_in) t.at(u, v) = {{a(old(u), old(v))}};
        }
      t.at(i + 1, i) = {Mono{}};
      break;
    }
  }
  return t;
}

// Values of the atoms: the a-lattice left of the insert and its crossing.
struct AtomValues {
  const Mat2* left = nullptr;
  bool crossing = false;

  bool operator()(const Atom& t) const {
    return t.is_insert ? crossing : left->at(t.r, t.c);
  }
};

Mat2 evaluate(const Tilde& t, const AtomValues& val) {
  Mat2 m(t.n);
  for (int u = 1; u <= t.n; ++u)
    for (int v = 1; v < u; ++v) {
      bool s = false;
      for (const Mono& mono : t.at(u, v)) {
        bool p = true;
        for (const Atom& atom : mono) p = p && val(atom);
        s ^= p;
      }
      m.set(u, v, s);
    }
  return m;
}

const Mat2& empty_matrix() {
  static const Mat2 kEmpty(0);
  return kEmpty;
}

const Mat2& left_a(const DipValuation& v, std::size_t s) {
  return s >= 2 ? v.A[s - 2] : empty_matrix();
}

Tilde tilde_at(const DippedDiagram& d, std::size_t s) {
  return tilde(d.inserts[s - 1], d.dim(s - 1));
}

bool has_crossing(const Insert& ins) {
  return ins.kind == InsertKind::kCrossing ||
         ins.kind == InsertKind::kRightCusp;
}

int crossing_grading(const Insert& ins) {
  return ins.kind == InsertKind::kRightCusp ? 1 : ins.grading;
}

std::vector<int> potentials_after(const Insert& ins,
                                  const std::vector<int>& mu) {
  std::vector<int> out = mu;
  const int i = ins.pos;
  switch (ins.kind) {
    case InsertKind::kParallel:
      break;
    case InsertKind::kCrossing:
      std::swap(out[i - 1], out[i]);
      break;
    case InsertKind::kRightCusp:
      out.erase(out.begin() + (i - 1), out.begin() + (i + 1));
      break;
    case InsertKind::kLeftCusp:
      out.insert(out.begin() + (i - 1), {ins.grading, ins.grading + 1});
      break;
  }
  return out;
}

std::string sup(std::size_t j, int r, int c) {
  return std::to_string(j) + "^{" + std::to_string(r) + "," +
         std::to_string(c) + "}";
}

}  // namespace

void validate(const DippedDiagram& d) {
  if (d.inserts.size() != d.dips() + 1)
    fail(ErrorCode::kDimension, "a dipped diagram has one insert more than dips");
  std::vector<int> mu;
  for (std::size_t s = 1; s <= d.dips(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    check_insert(ins, static_cast<int>(mu.size()));
    if (ins.kind == InsertKind::kLeftCusp) {
      mu = potentials_after(ins, mu);
      if (mu != d.potentials[s - 1])
        fail(ErrorCode::kDimension,
             "dip " + std::to_string(s) + " potentials do not follow its insert");
      continue;
    }
    mu = potentials_after(ins, mu);
    if (mu.size() != d.potentials[s - 1].size())
      fail(ErrorCode::kDimension,
           "dip " + std::to_string(s) + " has the wrong strand count");
    if (ins.kind != InsertKind::kParallel && mu != d.potentials[s - 1])
      fail(ErrorCode::kDimension,
           "dip " + std::to_string(s) + " potentials do not follow its insert");
    mu = d.potentials[s - 1];
  }
  check_insert(d.inserts.back(), static_cast<int>(mu.size()));
}

DipValuation zero_valuation(const DippedDiagram& d) {
  DipValuation v;
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    v.A.emplace_back(d.dim(j));
    v.B.emplace_back(d.dim(j));
  }
  v.inserts.assign(d.inserts.size(), false);
  return v;
}

namespace {

void check_shapes(const DippedDiagram& d, const DipValuation& v) {
  validate(d);
  if (v.A.size() != d.dips() || v.B.size() != d.dips() ||
      v.inserts.size() != d.inserts.size())
    fail(ErrorCode::kDimension, "valuation does not match the diagram");
  for (std::size_t j = 1; j <= d.dips(); ++j)
    if (v.A[j - 1].order() != d.dim(j) || v.B[j - 1].order() != d.dim(j))
      fail(ErrorCode::kDimension,
           "dip " + std::to_string(j) + " matrices have the wrong order");
}

}  // namespace

Mat2 a_tilde(const DippedDiagram& d, const DipValuation& v, std::size_t j) {
  if (j < 1 || j > d.inserts.size())
    fail(ErrorCode::kDimension, "no insert " + std::to_string(j));
  const Mat2& left = left_a(v, j);
  if (left.order() != d.dim(j - 1))
    fail(ErrorCode::kDimension, "a-lattice left of the insert has the wrong order");
  return evaluate(tilde_at(d, j), {&left, v.inserts[j - 1]});
}

std::string explain_dipped_augmentation(const DippedDiagram& d,
                                        const DipValuation& v) {
  check_shapes(d, v);
  for (std::size_t s = 1; s <= d.inserts.size(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    const std::string where = "insert " + std::to_string(s);
    if (!has_crossing(ins)) {
      if (v.inserts[s - 1]) return where + " has no crossing to augment";
      continue;
    }
    if (v.inserts[s - 1] && crossing_grading(ins) != 0)
      return where + ": crossing of nonzero grading augmented";
    const bool a = s >= 2 && v.A[s - 2].at(ins.pos + 1, ins.pos);
    if (ins.kind == InsertKind::kCrossing && a)
      return where + ": a_" + sup(s - 1, ins.pos + 1, ins.pos) + " must be 0";
    if (ins.kind == InsertKind::kRightCusp && !a)
      return where + ": a_" + sup(s - 1, ins.pos + 1, ins.pos) + " must be 1";
  }
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const Mat2& A = v.A[j - 1];
    const Mat2& B = v.B[j - 1];
    const std::string where = "dip " + std::to_string(j);
    if (!A.is_strictly_lower() || !B.is_strictly_lower())
      return where + ": lattices are not strictly lower triangular";
    const auto& mu = d.potentials[j - 1];
    for (auto [k, l] : A.ones())
      if (mu[k - 1] - mu[l - 1] != 1)
        return where + ": a^{" + std::to_string(k) + "," + std::to_string(l) +
               "} augmented off grading 0";
    for (auto [k, l] : B.ones())
      if (mu[k - 1] != mu[l - 1])
        return where + ": b^{" + std::to_string(k) + "," + std::to_string(l) +
               "} augmented off grading 0";
    if (!(A * A).is_zero()) return where + ": A^2 != 0";
    const Mat2 m = Mat2::identity(A.order()) + B;
    if (!(m * a_tilde(d, v, j) * m.unipotent_inverse() == A))
      return where + ": A != (I + B) Ã (I + B)^-1";
  }
  return {};
}

bool check_dipped_augmentation(const DippedDiagram& d, const DipValuation& v) {
  return explain_dipped_augmentation(d, v).empty();
}

DippedAugmentation mcs_to_dipped_aug(const Mcs& mcs) {
  const MarkedFront& f = mcs.front;
  DippedAugmentation out;
  for (std::size_t e = 0; e < f.size(); ++e) {
    const Event& ev = f[e];
    const ChainComplex& left = mcs.complexes[e];
    const ChainComplex& right = mcs.complexes[e + 1];
    Insert ins;
    switch (ev.kind) {
      case EventKind::kMark:
        ins.kind = InsertKind::kParallel;
        break;
      case EventKind::kCrossing:
        ins = {InsertKind::kCrossing, ev.pos,
               left.deg(ev.pos + 1) - left.deg(ev.pos)};
        break;
      case EventKind::kRightCusp:
        ins = {InsertKind::kRightCusp, ev.pos, 1};
        break;
      case EventKind::kLeftCusp:
        ins = {InsertKind::kLeftCusp, ev.pos, right.deg(ev.pos)};
        break;
    }
    out.diagram.inserts.push_back(ins);
    out.diagram.potentials.push_back(right.grading);
    out.valuation.A.push_back(right.d);
    out.valuation.B.push_back(ev.is_mark()
                                  ? Mat2::unit(right.n(), ev.pos, ev.lower)
                                  : Mat2(right.n()));
  }
  out.diagram.inserts.push_back({});
  out.valuation.inserts.assign(out.diagram.inserts.size(), false);
  return out;
}

bool is_minimal_occ_simple(const DippedDiagram& d, const DipValuation& v) {
  check_shapes(d, v);
  for (bool x : v.inserts)
    if (x) return false;
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const int ones = v.B[j - 1].popcount();
    if (d.inserts[j - 1].kind == InsertKind::kParallel ? ones != 1 : ones != 0)
      return false;
  }
  return d.inserts.back().kind != InsertKind::kParallel ||
         d.dim(d.dips()) == 0;
}

Mcs dipped_aug_to_mcs(const DippedAugmentation& da) {
  const DippedDiagram& d = da.diagram;
  if (!is_minimal_occ_simple(d, da.valuation))
    fail(ErrorCode::kPrecondition, "valuation is not minimal occ-simple");
  std::vector<Event> events;
  for (std::size_t s = 1; s <= d.inserts.size(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    switch (ins.kind) {
      case InsertKind::kParallel:
        if (s <= d.dips()) {
          const auto one = da.valuation.B[s - 1].ones().front();
          events.push_back(Event::mark(one.first, one.second));
        }
        break;
      case InsertKind::kCrossing:
        events.push_back(Event::crossing(ins.pos));
        break;
      case InsertKind::kRightCusp:
        events.push_back(Event::right_cusp(ins.pos));
        break;
      case InsertKind::kLeftCusp:
        events.push_back(Event::left_cusp(ins.pos));
        break;
    }
  }
  try {
    return reconstruct(MarkedFront(std::move(events)));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kInternal) throw;
    fail(ErrorCode::kMcsInvalid,
         std::string("dipped augmentation gives no MCS: ") + err.what());
  }
}

DippedAugmentation extend_by_zero(const DippedAugmentation& da,
                                  std::size_t site) {
  const DippedDiagram& d = da.diagram;
  if (site < 1 || site > d.inserts.size())
    fail(ErrorCode::kDimension, "no insert " + std::to_string(site));
  const Insert& ins = d.inserts[site - 1];
  const std::vector<int> mu_left =
      site >= 2 ? d.potentials[site - 2] : std::vector<int>{};
  DippedAugmentation out = da;
  DippedDiagram& nd = out.diagram;
  DipValuation& nv = out.valuation;
  const Mat2 A = a_tilde(d, da.valuation, site);
  // I_site D_new I' D_site: the feature stays in I_site, I' is parallel.
  const auto at = static_cast<std::ptrdiff_t>(site - 1);
  nd.potentials.insert(nd.potentials.begin() + at,
                       potentials_after(ins, mu_left));
  nd.inserts.insert(nd.inserts.begin() + at + 1, Insert{});
  nv.A.insert(nv.A.begin() + at, A);
  nv.B.insert(nv.B.begin() + at, Mat2(A.order()));
  nv.inserts.insert(nv.inserts.begin() + at + 1, false);
  return out;
}

HandleslideExtension extend_by_handleslide(const DippedAugmentation& da,
                                           std::size_t site) {
  const DippedDiagram& d = da.diagram;
  if (site < 2 || site > d.inserts.size())
    fail(ErrorCode::kPrecondition, "handleslide dip needs a dip on its left");
  const Insert& ins = d.inserts[site - 1];
  if (ins.kind != InsertKind::kCrossing || ins.grading != 0)
    fail(ErrorCode::kPrecondition,
         "handleslide dip must sit left of a grading-0 crossing");
  const int i = ins.pos;
  const Mat2& left = da.valuation.A[site - 2];
  const Mat2 e = Mat2::elementary(left.order(), i + 1, i);
  HandleslideExtension out{da, !da.valuation.inserts[site - 1]};
  DippedDiagram& nd = out.result.diagram;
  DipValuation& nv = out.result.valuation;
  // I_site becomes: parallel, D_new, then the crossing.
  const auto at = static_cast<std::ptrdiff_t>(site - 1);
  nd.potentials.insert(nd.potentials.begin() + at, d.potentials[site - 2]);
  nd.inserts.insert(nd.inserts.begin() + at, Insert{});
  nv.A.insert(nv.A.begin() + at, e * left * e);
  nv.B.insert(nv.B.begin() + at, Mat2::unit(left.order(), i + 1, i));
  nv.inserts.insert(nv.inserts.begin() + at, false);
  nv.inserts[site] = out.crossing_value;
  return out;
}

DippedAugmentation dip_augmentation(const FrontDiagram& plain,
                                    const ResolvedDGA& dga,
                                    const Augmentation& e) {
  if (plain.has_marks())
    fail(ErrorCode::kPrecondition, "dipping needs an unmarked front");
  if (e.size() != dga.generators.size())
    fail(ErrorCode::kDimension, "augmentation length differs from generators");
  std::map<std::size_t, bool> value;
  for (const Generator& g : dga.generators) value[g.event] = e[g.id - 1];
  const Trace& tr = plain.trace();
  auto insert_for = [&](std::size_t t) {
    const Event& ev = plain[t];
    const auto mu = tr.slice_potential(t);
    switch (ev.kind) {
      case EventKind::kCrossing:
        return Insert{InsertKind::kCrossing, ev.pos,
                      mu[ev.pos] - mu[ev.pos - 1]};
      case EventKind::kRightCusp:
        return Insert{InsertKind::kRightCusp, ev.pos, 1};
      case EventKind::kLeftCusp:
        return Insert{InsertKind::kLeftCusp, ev.pos,
                      tr.slice_potential(t + 1)[ev.pos - 1]};
      case EventKind::kMark:
        break;
    }
    return Insert{};
  };
  // The last insert always holds the next event; the rest of the front is
  // not part of the diagram yet.
  DippedAugmentation da;
  da.diagram.inserts = {insert_for(0)};
  da.valuation.inserts = {false};
  for (std::size_t t = 0; t < plain.size(); ++t) {
    std::size_t site = da.diagram.inserts.size();
    if (t > 0) {
      da.diagram.inserts.back() = insert_for(t);
      da.valuation.inserts.back() = value.count(t) ? value[t] : false;
    }
    if (plain[t].kind == EventKind::kCrossing && da.valuation.inserts.back()) {
      HandleslideExtension h = extend_by_handleslide(da, site);
      ensure(!h.crossing_value, "handleslide extension left q augmented");
      da = std::move(h.result);
      site = da.diagram.inserts.size();
    }
    da = extend_by_zero(da, site);
  }
  return da;
}

namespace {

// Unknowns of a homotopy: entries of supported grading -1.
struct Unknowns {
  std::map<std::tuple<int, std::size_t, int, int>, int> index;
  std::vector<std::string> names;

  int add(int kind, std::size_t j, int r, int c, std::string name) {
    const auto key = std::make_tuple(kind, j, r, c);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(names.size());
    index.emplace(key, id);
    names.push_back(std::move(name));
    return id;
  }
  // -1 if the crossing is off the support.
  int find(int kind, std::size_t j, int r, int c) const {
    auto it = index.find(std::make_tuple(kind, j, r, c));
    return it == index.end() ? -1 : it->second;
  }
};

constexpr int kA = 0, kB = 1, kQ = 2;

Unknowns collect_unknowns(const DippedDiagram& d) {
  Unknowns u;
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const auto& mu = d.potentials[j - 1];
    const int n = d.dim(j);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l < k; ++l) {
        if (mu[k - 1] == mu[l - 1]) u.add(kA, j, k, l, "H(a_" + sup(j, k, l) + ")");
        if (mu[k - 1] - mu[l - 1] == -1)
          u.add(kB, j, k, l, "H(b_" + sup(j, k, l) + ")");
      }
  }
  for (std::size_t s = 1; s <= d.inserts.size(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    if (has_crossing(ins) && crossing_grading(ins) == -1)
      u.add(kQ, s, 0, 0, "H(q_" + std::to_string(s) + ")");
  }
  return u;
}

// A linear form over the unknowns plus a constant.
struct Lin {
  std::vector<int> vars;  // may repeat; pairs cancel
  bool constant = false;

  void add_var(int id) {
    if (id >= 0) vars.push_back(id);
  }
  void add(const Lin& o) {
    vars.insert(vars.end(), o.vars.begin(), o.vars.end());
    constant ^= o.constant;
  }
  void normalize() {
    std::sort(vars.begin(), vars.end());
    std::vector<int> out;
    for (std::size_t t = 0; t < vars.size();) {
      std::size_t r = t;
      while (r < vars.size() && vars[r] == vars[t]) ++r;
      if ((r - t) % 2) out.push_back(vars[t]);
      t = r;
    }
    vars = std::move(out);
  }
};

// Matrices whose entries are linear forms.
struct LinMat {
  int n = 0;
  std::vector<Lin> e;
  explicit LinMat(int order) : n(order), e(static_cast<std::size_t>(order) * order) {}
  Lin& at(int r, int c) { return e[(r - 1) * n + (c - 1)]; }
  const Lin& at(int r, int c) const { return e[(r - 1) * n + (c - 1)]; }
};

LinMat operator*(const LinMat& h, const Mat2& m) {
  LinMat out(h.n);
  for (int r = 1; r <= h.n; ++r)
    for (int c = 1; c <= h.n; ++c)
      for (int p = 1; p <= h.n; ++p)
        if (m.at(p, c)) out.at(r, c).add(h.at(r, p));
  return out;
}

LinMat operator*(const Mat2& m, const LinMat& h) {
  LinMat out(h.n);
  for (int r = 1; r <= h.n; ++r)
    for (int c = 1; c <= h.n; ++c)
      for (int p = 1; p <= h.n; ++p)
        if (m.at(r, p)) out.at(r, c).add(h.at(p, c));
  return out;
}

LinMat h_lattice(const Unknowns& u, int kind, std::size_t j, int n) {
  LinMat h(n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l < k; ++l) h.at(k, l).add_var(u.find(kind, j, k, l));
  return h;
}

// H(Ã) by the derivation rule H(xy) = H(x) e2(y) + e1(x) H(y).
LinMat h_tilde(const Tilde& t, const Unknowns& u, std::size_t s,
               const AtomValues& e1, const AtomValues& e2) {
  LinMat out(t.n);
  for (int r = 1; r <= t.n; ++r)
    for (int c = 1; c < r; ++c)
      for (const Mono& mono : t.at(r, c))
        for (std::size_t k = 0; k < mono.size(); ++k) {
          bool coeff = true;
          for (std::size_t p = 0; p < k; ++p) coeff = coeff && e1(mono[p]);
          for (std::size_t p = k + 1; p < mono.size(); ++p)
            coeff = coeff && e2(mono[p]);
          if (!coeff) continue;
          const Atom& atom = mono[k];
          out.at(r, c).add_var(atom.is_insert
                                   ? u.find(kQ, s, 0, 0)
                                   : u.find(kA, s - 1, atom.r, atom.c));
        }
  return out;
}

struct Equation {
  Lin lhs;  // lhs.constant is the right-hand side moved over
  std::string label;
};

std::vector<Equation> homotopy_equations(const DippedDiagram& d,
                                         const DipValuation& e1,
                                         const DipValuation& e2,
                                         const Unknowns& u) {
  std::vector<Equation> eqs;
  auto push = [&](Lin lin, bool rhs, std::string label) {
    lin.constant ^= rhs;
    lin.normalize();
    if (lin.vars.empty() && !lin.constant) return;
    eqs.push_back({std::move(lin), std::move(label)});
  };
  // Crossings: e1 - e2 = H(a^{i+1,i}) of the dip on the left.
  for (std::size_t s = 2; s <= d.inserts.size(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    if (!has_crossing(ins)) continue;
    Lin lin;
    lin.add_var(u.find(kA, s - 1, ins.pos + 1, ins.pos));
    push(lin, e1.inserts[s - 1] != e2.inserts[s - 1],
         std::string(ins.kind == InsertKind::kCrossing ? "q" : "z") + "_" +
             std::to_string(s));
  }
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const int n = d.dim(j);
    const Mat2& A1 = e1.A[j - 1];
    const Mat2& A2 = e2.A[j - 1];
    const Mat2& B1 = e1.B[j - 1];
    const Mat2& B2 = e2.B[j - 1];
    const LinMat HA = h_lattice(u, kA, j, n);
    const LinMat HB = h_lattice(u, kB, j, n);
    // e1(A) + e2(A) = H(A) e2(A) + e1(A) H(A).
    const LinMat a_side = HA * A2;
    const LinMat b_side = A1 * HA;
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l < k; ++l) {
        Lin lin = a_side.at(k, l);
        lin.add(b_side.at(k, l));
        push(lin, A1.at(k, l) != A2.at(k, l), "a_" + sup(j, k, l));
      }
    // e1(B) + e2(B) = (I + e1(B)) H(A) + H(Ã)(I + e2(B)) + H(B) e2(A)
    //                 + e1(Ã) H(B).
    const Tilde t = tilde_at(d, j);
    const AtomValues v1{&left_a(e1, j), e1.inserts[j - 1]};
    const AtomValues v2{&left_a(e2, j), e2.inserts[j - 1]};
    const Mat2 I = Mat2::identity(n);
    const LinMat t1 = (I + B1) * HA;
    const LinMat t2 = h_tilde(t, u, j, v1, v2) * (I + B2);
    const LinMat t3 = HB * A2;
    const LinMat t4 = evaluate(t, v1) * HB;
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l < k; ++l) {
        Lin lin = t1.at(k, l);
        lin.add(t2.at(k, l));
        lin.add(t3.at(k, l));
        lin.add(t4.at(k, l));
        push(lin, B1.at(k, l) != B2.at(k, l), "b_" + sup(j, k, l));
      }
  }
  return eqs;
}

std::string format_equation(const Equation& eq, const Unknowns& u) {
  std::string s;
  for (int v : eq.lhs.vars) {
    if (!s.empty()) s += " + ";
    s += u.names[v];
  }
  if (s.empty()) s = "0";
  return eq.label + ": " + s + " = " + (eq.lhs.constant ? "1" : "0");
}

DipValuation valuation_from(const DippedDiagram& d, const Unknowns& u,
                            const std::vector<bool>& x) {
  DipValuation h = zero_valuation(d);
  for (const auto& [key, id] : u.index) {
    if (!x[id]) continue;
    const auto [kind, j, r, c] = key;
    if (kind == kA) h.A[j - 1].set(r, c, true);
    if (kind == kB) h.B[j - 1].set(r, c, true);
    if (kind == kQ) h.inserts[j - 1] = true;
  }
  return h;
}

// Gaussian elimination that remembers which equations each row sums.
std::vector<std::size_t> contradiction_of(const std::vector<Equation>& eqs,
                                          int unknowns) {
  struct Row {
    std::vector<bool> vars;
    bool rhs;
    std::vector<bool> from;
  };
  std::vector<Row> rows;
  for (std::size_t t = 0; t < eqs.size(); ++t) {
    Row r{std::vector<bool>(unknowns, false), eqs[t].lhs.constant,
          std::vector<bool>(eqs.size(), false)};
    for (int v : eqs[t].lhs.vars) r.vars[v] = !r.vars[v];
    r.from[t] = true;
    rows.push_back(std::move(r));
  }
  std::size_t pivot_row = 0;
  for (int col = 0; col < unknowns; ++col) {
    std::size_t p = pivot_row;
    while (p < rows.size() && !rows[p].vars[col]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || !rows[r].vars[col]) continue;
      for (int c = 0; c < unknowns; ++c)
        rows[r].vars[c] = rows[r].vars[c] != rows[pivot_row].vars[c];
      rows[r].rhs = rows[r].rhs != rows[pivot_row].rhs;
      for (std::size_t f = 0; f < eqs.size(); ++f)
        rows[r].from[f] = rows[r].from[f] != rows[pivot_row].from[f];
    }
    ++pivot_row;
  }
  // Among the inconsistent rows, the one built from the fewest equations.
  std::vector<std::size_t> best;
  for (std::size_t r = pivot_row; r < rows.size(); ++r) {
    if (!rows[r].rhs) continue;
    std::vector<std::size_t> used;
    for (std::size_t f = 0; f < eqs.size(); ++f)
      if (rows[r].from[f]) used.push_back(f);
    if (best.empty() || used.size() < best.size()) best = std::move(used);
  }
  return best;
}

}  // namespace

bool check_dipped_homotopy(const DippedDiagram& d, const DipValuation& e1,
                           const DipValuation& e2, const DipValuation& h) {
  check_shapes(d, e1);
  check_shapes(d, e2);
  check_shapes(d, h);
  // Support: crossings of grading -1 only.
  for (std::size_t s = 1; s <= d.inserts.size(); ++s) {
    if (!h.inserts[s - 1]) continue;
    const Insert& ins = d.inserts[s - 1];
    if (!has_crossing(ins) || crossing_grading(ins) != -1) return false;
  }
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const auto& mu = d.potentials[j - 1];
    if (!h.A[j - 1].is_strictly_lower() || !h.B[j - 1].is_strictly_lower())
      return false;
    for (auto [k, l] : h.A[j - 1].ones())
      if (mu[k - 1] != mu[l - 1]) return false;
    for (auto [k, l] : h.B[j - 1].ones())
      if (mu[k - 1] - mu[l - 1] != -1) return false;
  }
  for (std::size_t s = 2; s <= d.inserts.size(); ++s) {
    const Insert& ins = d.inserts[s - 1];
    if (!has_crossing(ins)) continue;
    if ((e1.inserts[s - 1] != e2.inserts[s - 1]) !=
        h.A[s - 2].at(ins.pos + 1, ins.pos))
      return false;
  }
  for (std::size_t j = 1; j <= d.dips(); ++j) {
    const int n = d.dim(j);
    const Mat2 I = Mat2::identity(n);
    const Mat2& A1 = e1.A[j - 1];
    const Mat2& A2 = e2.A[j - 1];
    const Mat2& B1 = e1.B[j - 1];
    const Mat2& B2 = e2.B[j - 1];
    const Mat2& HA = h.A[j - 1];
    const Mat2& HB = h.B[j - 1];
    const Mat2 m = I + HA;
    if (!(m * A2 * m.unipotent_inverse() == A1)) return false;
    // H(Ã) entry by entry, each monomial by the derivation rule.
    const Tilde t = tilde_at(d, j);
    const AtomValues v1{&left_a(e1, j), e1.inserts[j - 1]};
    const AtomValues v2{&left_a(e2, j), e2.inserts[j - 1]};
    const AtomValues vh{&left_a(h, j), h.inserts[j - 1]};
    Mat2 h_tilde_m(n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c < r; ++c) {
        bool s = false;
        for (const Mono& mono : t.at(r, c))
          for (std::size_t k = 0; k < mono.size(); ++k) {
            bool p = vh(mono[k]);
            for (std::size_t q = 0; q < k; ++q) p = p && v1(mono[q]);
            for (std::size_t q = k + 1; q < mono.size(); ++q) p = p && v2(mono[q]);
            s ^= p;
          }
        h_tilde_m.set(r, c, s);
      }
    const Mat2 rhs = (I + B1) * HA + h_tilde_m * (I + B2) + HB * A2 +
                     evaluate(t, v1) * HB;
    if (!(rhs == B1 + B2)) return false;
  }
  return true;
}

HomotopySearch find_dipped_homotopy(const DippedDiagram& d,
                                    const DipValuation& e1,
                                    const DipValuation& e2) {
  check_shapes(d, e1);
  check_shapes(d, e2);
  const Unknowns u = collect_unknowns(d);
  const int n = static_cast<int>(u.names.size());
  const std::vector<Equation> eqs = homotopy_equations(d, e1, e2, u);
  Gf2System sys(n);
  for (const Equation& eq : eqs) sys.add_equation(eq.lhs.vars, eq.lhs.constant);
  HomotopySearch out;
  out.unknowns = n;
  if (auto x = sys.solve()) {
    out.homotopy = valuation_from(d, u, *x);
    ensure(check_dipped_homotopy(d, e1, e2, *out.homotopy),
           "solved homotopy fails its own equations");
    return out;
  }
  const std::vector<std::size_t> used = contradiction_of(eqs, n);
  ensure(!used.empty(), "inconsistent homotopy system without a witness");
  Lin sum;
  for (std::size_t f : used) {
    sum.add(eqs[f].lhs);
    out.contradiction.push_back(format_equation(eqs[f], u));
  }
  sum.normalize();
  ensure(sum.vars.empty() && sum.constant, "witness does not sum to 0 = 1");
  return out;
}

std::optional<DipValuation> find_dipped_homotopy_exhaustive(
    const DippedDiagram& d, const DipValuation& e1, const DipValuation& e2,
    int max_unknowns) {
  const Unknowns u = collect_unknowns(d);
  const int n = static_cast<int>(u.names.size());
  if (n > max_unknowns)
    fail(ErrorCode::kPrecondition,
         std::to_string(n) + " unknowns are too many to enumerate");
  std::vector<bool> x(n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int b = 0; b < n; ++b) x[b] = (mask >> b) & 1u;
    DipValuation h = valuation_from(d, u, x);
    if (check_dipped_homotopy(d, e1, e2, h)) return h;
  }
  return std::nullopt;
}

AlignedPair align(const Mcs& a, const Mcs& b) {
  if (!(a.front.underlying() == b.front.underlying()))
    fail(ErrorCode::kPrecondition, "MCSs live on different fronts");
  DippedAugmentation da = mcs_to_dipped_aug(a);
  DippedAugmentation db = mcs_to_dipped_aug(b);
  // Dips in the gap after each unmarked event: 1 + marks.
  auto gaps = [](const MarkedFront& f) {
    std::vector<std::size_t> count;
    for (std::size_t e = 0; e < f.size(); ++e) {
      if (f[e].is_mark())
        ++count.back();
      else
        count.push_back(1);
    }
    return count;
  };
  const auto ga = gaps(a.front), gb = gaps(b.front);
  // Insert index (1-based) of each unmarked event, kept current as dips are
  // added.
  auto pad = [](DippedAugmentation& d, const std::vector<std::size_t>& mine,
                const std::vector<std::size_t>& other) {
    std::size_t site = 1;
    for (std::size_t g = 0; g < mine.size(); ++g) {
      for (std::size_t k = mine[g]; k < other[g]; ++k) d = extend_by_zero(d, site);
      site += std::max(mine[g], other[g]);
    }
  };
  pad(da, ga, gb);
  pad(db, gb, ga);
  ensure(da.diagram.inserts == db.diagram.inserts &&
             da.diagram.potentials == db.diagram.potentials,
         "padded dipped diagrams differ");
  return {da.diagram, da.valuation, db.valuation};
}

}  // namespace legendrian
