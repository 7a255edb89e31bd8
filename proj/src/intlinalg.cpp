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

#include "gcx/intlinalg.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>
#include <string>

namespace gcx {
namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

struct Position {
  std::size_t row;
  std::size_t col;
};

// Clears column `t` below the pivot up to remainders: row i -= q * row t.
void ReduceRowsSerial(DenseIntMatrix& a, std::size_t t) {
  const Integer& pivot = a[t][t];
  for (std::size_t i = t + 1; i < a.size(); ++i) {
    if (a[i][t] == 0) continue;
    const Integer q = a[i][t] / pivot;
    if (q == 0) continue;
    for (std::size_t j = t; j < a[i].size(); ++j) a[i][j] -= q * a[t][j];
  }
}

void ReduceRowsParallel(DenseIntMatrix& a, std::size_t t) {
  const Integer& pivot = a[t][t];
  const auto rows = static_cast<long long>(a.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(WorkerCount())
  for (long long i = static_cast<long long>(t) + 1; i < rows; ++i) {
    auto& row = a[static_cast<std::size_t>(i)];
    if (row[t] == 0) continue;
    const Integer q = row[t] / pivot;
    if (q == 0) continue;
    for (std::size_t j = t; j < row.size(); ++j) row[j] -= q * a[t][j];
  }
}

// Clears row `t` right of the pivot up to remainders: col j -= q * col t.
void ReduceColsSerial(DenseIntMatrix& a, std::size_t t) {
  const Integer pivot = a[t][t];
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (a[t][j] == 0) continue;
    const Integer q = a[t][j] / pivot;
    if (q == 0) continue;
    for (std::size_t i = t; i < a.size(); ++i) {
      if (a[i][t] != 0) a[i][j] -= q * a[i][t];
    }
  }
}

void ReduceColsParallel(DenseIntMatrix& a, std::size_t t) {
  const Integer pivot = a[t][t];
  const auto cols = static_cast<long long>(a.empty() ? 0 : a[0].size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(WorkerCount())
  for (long long jj = static_cast<long long>(t) + 1; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    if (a[t][j] == 0) continue;
    const Integer q = a[t][j] / pivot;
    if (q == 0) continue;
    for (std::size_t i = t; i < a.size(); ++i) {
      if (a[i][t] != 0) a[i][j] -= q * a[i][t];
    }
  }
}

void SwapRows(DenseIntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 != r2) std::swap(a[r1], a[r2]);
}

void SwapCols(DenseIntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (auto& row : a) std::swap(row[c1], row[c2]);
}

// Smallest nonzero magnitude in the trailing block; ties go to the lowest
// row, then the lowest column.
std::optional<Position> SmallestInBlock(const DenseIntMatrix& a,
                                        std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.size(); ++i) {
    for (std::size_t j = t; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      if (!best || mpz_cmpabs(a[i][j].get_mpz_t(), a[best->row][best->col].get_mpz_t()) < 0) {
        best = Position{i, j};
      }
    }
  }
  return best;
}

// Smallest nonzero magnitude left in pivot row t or pivot column t.
std::optional<Position> SmallestInCross(const DenseIntMatrix& a,
                                        std::size_t t) {
  std::optional<Position> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (a[i][j] == 0) return;
    if (!best || mpz_cmpabs(a[i][j].get_mpz_t(), a[best->row][best->col].get_mpz_t()) < 0) {
      best = Position{i, j};
    }
  };
  for (std::size_t i = t + 1; i < a.size(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a[t].size(); ++j) consider(t, j);
  return best;
}

std::vector<Integer> DivisibilityChain(std::vector<Integer> diagonal) {
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const Integer g = gcd(diagonal[i], diagonal[j]);
      const Integer l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> ReducedRowEchelon(RationalMatrix& a,
                                           std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][col] == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const mpq_class inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const mpq_class factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix ToRational(const SparseIntMatrix& m) {
  RationalMatrix a(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (const auto& [index, value] : m.entries()) {
    a[index.first][index.second] = value;
  }
  return a;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::Identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, 1);
  return m;
}

SparseIntMatrix SparseIntMatrix::FromDense(const DenseIntMatrix& dense,
                                           std::size_t cols) {
  SparseIntMatrix m(dense.size(), cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged dense matrix");
    }
    for (std::size_t j = 0; j < cols; ++j) m.Set(i, j, dense[i][j]);
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::FromDense(
    const std::vector<std::vector<long long>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense[0].size();
  SparseIntMatrix m(dense.size(), cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged dense matrix");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.Set(i, j, Integer(std::to_string(dense[i][j])));
    }
  }
  return m;
}

void SparseIntMatrix::CheckIndex(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "index (" + std::to_string(row + 1) + ", " +
                    std::to_string(col + 1) + ") outside matrix");
  }
}

Integer SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  CheckIndex(row, col);
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? Integer(0) : it->second;
}

void SparseIntMatrix::Add(std::size_t row, std::size_t col,
                          const Integer& value) {
  CheckIndex(row, col);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (inserted) return;
  it->second += value;
  if (it->second == 0) entries_.erase(it);
}

void SparseIntMatrix::Set(std::size_t row, std::size_t col,
                          const Integer& value) {
  CheckIndex(row, col);
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

DenseIntMatrix SparseIntMatrix::ToDense() const {
  DenseIntMatrix dense(rows_, IntVector(cols_, 0));
  for (const auto& [index, value] : entries_) {
    dense[index.first][index.second] = value;
  }
  return dense;
}

SparseIntMatrix SparseIntMatrix::Transpose() const {
  SparseIntMatrix t(cols_, rows_);
  for (const auto& [index, value] : entries_) {
    t.entries_.emplace(Index{index.second, index.first}, value);
  }
  return t;
}

SparseIntMatrix Multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " times " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
  // Row lists of b for the inner loop.
  std::vector<std::vector<std::pair<std::size_t, const Integer*>>> b_rows(
      b.rows());
  for (const auto& [index, value] : b.entries()) {
    b_rows[index.first].emplace_back(index.second, &value);
  }
  SparseIntMatrix product(a.rows(), b.cols());
  for (const auto& [index, value] : a.entries()) {
    for (const auto& [col, b_value] : b_rows[index.second]) {
      product.Add(index.first, col, value * *b_value);
    }
  }
  return product;
}

SmithForm SmithNormalForm(const SparseIntMatrix& m, Execution execution) {
  DenseIntMatrix a = m.ToDense();
  const bool parallel = execution == Execution::kParallel;
  std::vector<Integer> diagonal;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    const auto start = SmallestInBlock(a, t);
    if (!start) break;
    SwapRows(a, t, start->row);
    SwapCols(a, t, start->col);
    while (true) {
      if (parallel) {
        ReduceRowsParallel(a, t);
        ReduceColsParallel(a, t);
      } else {
        ReduceRowsSerial(a, t);
        ReduceColsSerial(a, t);
      }
      // Remainders are strictly smaller than the pivot, so this terminates.
      const auto next = SmallestInCross(a, t);
      if (!next) break;
      if (next->col == t) {
        SwapRows(a, t, next->row);
      } else {
        SwapCols(a, t, next->col);
      }
    }
    diagonal.push_back(abs(a[t][t]));
  }
  SmithForm form;
  form.rank = diagonal.size();
  form.invariant_factors = DivisibilityChain(std::move(diagonal));
  return form;
}

std::size_t RationalRank(const SparseIntMatrix& m) {
  RationalMatrix a = ToRational(m);
  return ReducedRowEchelon(a, m.cols()).size();
}

std::vector<IntVector> RationalKernelBasis(const SparseIntMatrix& m) {
  RationalMatrix a = ToRational(m);
  const auto pivots = ReducedRowEchelon(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t col : pivots) is_pivot[col] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    Integer denominator = 1;
    for (const auto& x : v) denominator = lcm(denominator, x.get_den());
    IntVector w(m.cols());
    Integer content = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      w[j] = v[j].get_num() * (denominator / v[j].get_den());
      content = gcd(content, w[j]);
    }
    int orientation = 1;
    for (const auto& x : w) {
      if (x != 0) {
        orientation = sgn(x);
        break;
      }
    }
    for (auto& x : w) x = x / content * orientation;
    basis.push_back(std::move(w));
  }
  return basis;
}

IntVector Apply(const SparseIntMatrix& m, const IntVector& v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  }
  IntVector out(m.rows(), 0);
  for (const auto& [index, value] : m.entries()) {
    out[index.first] += value * v[index.second];
  }
  return out;
}

}  // namespace gcx
