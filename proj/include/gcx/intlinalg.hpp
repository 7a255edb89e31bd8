// Copyright 2026 The gcx Authors
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

#ifndef GCX_INTLINALG_HPP_
#define GCX_INTLINALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gcx/error.hpp"
#include "gcx/parallel.hpp"

namespace gcx {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using DenseIntMatrix = std::vector<IntVector>;

// Exact sparse integer matrix. Zero entries are never stored.
class SparseIntMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols) {}

  static SparseIntMatrix Identity(std::size_t n);
  static SparseIntMatrix FromDense(const DenseIntMatrix& dense,
                                   std::size_t cols);
  static SparseIntMatrix FromDense(
      const std::vector<std::vector<long long>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool IsZero() const { return entries_.empty(); }

  Integer at(std::size_t row, std::size_t col) const;
  // Adds `value` to the entry; entries that cancel to zero are erased.
  void Add(std::size_t row, std::size_t col, const Integer& value);
  void Set(std::size_t row, std::size_t col, const Integer& value);

  // Row-major iteration order.
  const std::map<Index, Integer>& entries() const { return entries_; }

  DenseIntMatrix ToDense() const;
  SparseIntMatrix Transpose() const;

  friend bool operator==(const SparseIntMatrix&,
                         const SparseIntMatrix&) = default;

 private:
  void CheckIndex(std::size_t row, std::size_t col) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, Integer> entries_;
};

// Throws kDimensionMismatch when a.cols() != b.rows().
SparseIntMatrix Multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct SmithForm {
  // Positive invariant factors d_1 | d_2 | ... | d_r.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

// Diagonalises by unimodular row and column operations, always pivoting on
// the entry of smallest magnitude (ties: lowest row, then lowest column),
// then normalises the diagonal into a divisibility chain.
SmithForm SmithNormalForm(const SparseIntMatrix& m,
                          Execution execution = Execution::kParallel);

// Rank over the rationals, from the reduced row echelon form.
std::size_t RationalRank(const SparseIntMatrix& m);

// Primitive integer vectors spanning the rational kernel, one per free
// column of the reduced row echelon form, in free-column order. The first
// nonzero coordinate of each vector is positive.
std::vector<IntVector> RationalKernelBasis(const SparseIntMatrix& m);

// m * v for a dense column vector.
IntVector Apply(const SparseIntMatrix& m, const IntVector& v);

}  // namespace gcx

#endif  // GCX_INTLINALG_HPP_
