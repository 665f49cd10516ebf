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

// Dense Z2 matrices and linear systems.

#ifndef LEGENDRIAN_GF2_HPP_
#define LEGENDRIAN_GF2_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace legendrian {

// Square Z2 matrix of order <= 64, indexed 1-based as (row, column).
class Mat2 {
 public:
  static constexpr int kMaxOrder = 64;

  Mat2() = default;
  explicit Mat2(int n);

  static Mat2 identity(int n);
  // Single 1 at (k, l).
  static Mat2 unit(int n, int k, int l);
  // I + unit(k, l); its own inverse when k != l.
  static Mat2 elementary(int n, int k, int l);
  // Permutation exchanging i and i+1.
  static Mat2 transposition(int n, int i);

  int order() const { return n_; }
  bool at(int k, int l) const { return (rows_[k - 1] >> (l - 1)) & 1u; }
  void set(int k, int l, bool v);
  void flip(int k, int l) { rows_[k - 1] ^= bit(l); }
  std::uint64_t row_bits(int k) const { return rows_[k - 1]; }
  void set_row_bits(int k, std::uint64_t bits) { rows_[k - 1] = bits; }

  bool is_zero() const;
  bool is_strictly_lower() const;
  int popcount() const;

  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const;
  Mat2& operator+=(const Mat2& o);
  Mat2 transpose() const;
  // Inverse of a unipotent (unit lower triangular) matrix.
  Mat2 unipotent_inverse() const;

  // New zero rows and columns at k and k+1; old index j >= k moves to j+2.
  Mat2 insert_pair(int k) const;
  // Drops rows and columns k and k+1.
  Mat2 delete_pair(int k) const;

  // Rows as bit strings, row n first; each row lists columns 1..n.
  std::string dump() const;
  // Sorted (row, column) list of ones.
  std::vector<std::pair<int, int>> ones() const;

  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Mat2& a, const Mat2& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rows_ < b.rows_;
  }

 private:
  static std::uint64_t bit(int l) { return std::uint64_t{1} << (l - 1); }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Augmented Z2 system over an arbitrary number of unknowns.
class Gf2System {
 public:
  explicit Gf2System(int unknowns);

  int unknowns() const { return unknowns_; }
  int equations() const { return static_cast<int>(rows_.size()); }
  // Adds sum_{j in vars} x_j = rhs; repeated indices cancel.
  void add_equation(const std::vector<int>& vars, bool rhs);

  // Gaussian elimination; returns one solution or nullopt if inconsistent.
  std::optional<std::vector<bool>> solve() const;
  int rank() const;

 private:
  using Row = std::vector<std::uint64_t>;
  int unknowns_;
  int words_;
  std::vector<Row> rows_;  // last bit (index unknowns_) is the rhs
};

}  // namespace legendrian

#endif  // LEGENDRIAN_GF2_HPP_
