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

#include "legendrian/gf2.hpp"

#include <bit>
#include <utility>

#include "legendrian/error.hpp"

namespace legendrian {

Mat2::Mat2(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxOrder)
    fail(ErrorCode::kDimension, "matrix order " + std::to_string(n) +
                                    " outside 0.." +
                                    std::to_string(kMaxOrder));
}

Mat2 Mat2::identity(int n) {
  Mat2 m(n);
  for (int k = 1; k <= n; ++k) m.rows_[k - 1] = bit(k);
  return m;
}

Mat2 Mat2::unit(int n, int k, int l) {
  Mat2 m(n);
  m.set(k, l, true);
  return m;
}

Mat2 Mat2::elementary(int n, int k, int l) {
  Mat2 m = identity(n);
  m.flip(k, l);
  return m;
}

Mat2 Mat2::transposition(int n, int i) {
  Mat2 m = identity(n);
  m.rows_[i - 1] = bit(i + 1);
  m.rows_[i] = bit(i);
  return m;
}

void Mat2::set(int k, int l, bool v) {
  if (v)
    rows_[k - 1] |= bit(l);
  else
    rows_[k - 1] &= ~bit(l);
}

bool Mat2::is_zero() const {
  for (auto r : rows_)
    if (r) return false;
  return true;
}

bool Mat2::is_strictly_lower() const {
  for (int k = 1; k <= n_; ++k) {
    // Columns k..n must vanish in row k.
    const std::uint64_t allowed = bit(k) - 1;
    if (rows_[k - 1] & ~allowed) return false;
  }
  return true;
}

int Mat2::popcount() const {
  int c = 0;
  for (auto r : rows_) c += std::popcount(r);
  return c;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  ensure(n_ == o.n_, "matrix product order mismatch");
  Mat2 out(n_);
  for (int k = 0; k < n_; ++k) {
    std::uint64_t r = rows_[k];
    std::uint64_t acc = 0;
    while (r) {
      const int j = std::countr_zero(r);
      acc ^= o.rows_[j];
      r &= r - 1;
    }
    out.rows_[k] = acc;
  }
  return out;
}

Mat2 Mat2::operator+(const Mat2& o) const {
  Mat2 out = *this;
  out += o;
  return out;
}

Mat2& Mat2::operator+=(const Mat2& o) {
  ensure(n_ == o.n_, "matrix sum order mismatch");
  for (int k = 0; k < n_; ++k) rows_[k] ^= o.rows_[k];
  return *this;
}

Mat2 Mat2::transpose() const {
  Mat2 out(n_);
  for (int k = 1; k <= n_; ++k)
    for (int l = 1; l <= n_; ++l)
      if (at(k, l)) out.set(l, k, true);
  return out;
}

Mat2 Mat2::unipotent_inverse() const {
  // (I + N)^{-1} = I + N + N^2 + ... for nilpotent N.
  Mat2 nil = *this + identity(n_);
  Mat2 term = identity(n_);
  Mat2 sum = identity(n_);
  for (int i = 0; i < n_; ++i) {
    term = term * nil;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

Mat2 Mat2::insert_pair(int k) const {
  ensure(k >= 1 && k <= n_ + 1, "insert_pair position");
  Mat2 out(n_ + 2);
  auto old_to_new = [k](int j) { return j < k ? j : j + 2; };
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c)) out.set(old_to_new(r), old_to_new(c), true);
  return out;
}

Mat2 Mat2::delete_pair(int k) const {
  ensure(k >= 1 && k + 1 <= n_, "delete_pair position");
  Mat2 out(n_ - 2);
  auto new_of = [k](int j) { return j < k ? j : j - 2; };
  for (int r = 1; r <= n_; ++r) {
    if (r == k || r == k + 1) continue;
    for (int c = 1; c <= n_; ++c) {
      if (c == k || c == k + 1) continue;
      if (at(r, c)) out.set(new_of(r), new_of(c), true);
    }
  }
  return out;
}

std::string Mat2::dump() const {
  std::string s;
  for (int k = n_; k >= 1; --k) {
    for (int l = 1; l <= n_; ++l) s += at(k, l) ? '1' : '0';
    if (k > 1) s += '\n';
  }
  return s;
}

std::vector<std::pair<int, int>> Mat2::ones() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n_; ++k)
    for (int l = 1; l <= n_; ++l)
      if (at(k, l)) out.emplace_back(k, l);
  return out;
}

Gf2System::Gf2System(int unknowns)
    : unknowns_(unknowns), words_((unknowns + 1 + 63) / 64) {}

void Gf2System::add_equation(const std::vector<int>& vars, bool rhs) {
  Row row(words_, 0);
  for (int v : vars) {
    ensure(v >= 0 && v < unknowns_, "equation variable out of range");
    row[v / 64] ^= std::uint64_t{1} << (v % 64);
  }
  if (rhs) row[unknowns_ / 64] ^= std::uint64_t{1} << (unknowns_ % 64);
  rows_.push_back(std::move(row));
}

namespace {

bool test_bit(const std::vector<std::uint64_t>& r, int j) {
  return (r[j / 64] >> (j % 64)) & 1u;
}

// Row-reduces in place; returns pivot columns in row order.
std::vector<int> eliminate(std::vector<std::vector<std::uint64_t>>& rows,
                           int unknowns) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !test_bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o != r && test_bit(rows[o], c))
        for (std::size_t w = 0; w < rows[o].size(); ++w)
          rows[o][w] ^= rows[r][w];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<bool>> Gf2System::solve() const {
  auto rows = rows_;
  const auto pivots = eliminate(rows, unknowns_);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r)
    if (test_bit(rows[r], unknowns_)) return std::nullopt;
  std::vector<bool> x(unknowns_, false);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = test_bit(rows[r], unknowns_);
  return x;
}

int Gf2System::rank() const {
  auto rows = rows_;
  return static_cast<int>(eliminate(rows, unknowns_).size());
}

}  // namespace legendrian
