/*
   Copyright 2026 The intpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "intpoly/hnf.hpp"

#include <stdexcept>
#include <utility>

namespace intpoly {

namespace {

void row_axpy(IntVec& dst, const BigInt& q, const IntVec& src) {
  for (size_t k = 0; k < dst.size(); ++k) dst[k] -= q * src[k];
}

void negate_row(IntVec& row) {
  for (auto& v : row) v = -v;
}

bool is_zero_row(const IntVec& row) {
  for (const auto& v : row)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

HnfResult hnf_rows_with_transform(IntMat m) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  IntMat t(rows, IntVec(rows, BigInt(0)));
  for (size_t i = 0; i < rows; ++i) t[i][i] = BigInt(1);

  size_t pivot = 0;
  for (size_t col = 0; col < cols && pivot < rows; ++col) {
    // Euclidean elimination below the pivot position.
    while (true) {
      size_t best = rows;
      for (size_t i = pivot; i < rows; ++i) {
        if (m[i][col].is_zero()) continue;
        if (best == rows || abs(m[i][col]) < abs(m[best][col])) best = i;
      }
      if (best == rows) break;  // column is zero below pivot
      std::swap(m[pivot], m[best]);
      std::swap(t[pivot], t[best]);
      bool done = true;
      for (size_t i = pivot + 1; i < rows; ++i) {
        if (m[i][col].is_zero()) continue;
        BigInt q = fdiv_q(m[i][col], m[pivot][col]);
        row_axpy(m[i], q, m[pivot]);
        row_axpy(t[i], q, t[pivot]);
        if (!m[i][col].is_zero()) done = false;
      }
      if (done) break;
    }
    if (m[pivot][col].is_zero()) continue;
    if (m[pivot][col].sign() < 0) {
      negate_row(m[pivot]);
      negate_row(t[pivot]);
    }
    for (size_t i = 0; i < pivot; ++i) {
      BigInt q = fdiv_q(m[i][col], m[pivot][col]);
      if (!q.is_zero()) {
        row_axpy(m[i], q, m[pivot]);
        row_axpy(t[i], q, t[pivot]);
      }
    }
    ++pivot;
  }
  return {std::move(m), std::move(t)};
}

IntMat hnf_rows(IntMat m) {
  IntMat h = hnf_rows_with_transform(std::move(m)).h;
  while (!h.empty() && is_zero_row(h.back())) h.pop_back();
  return h;
}

IntVec reduce_mod_lattice(IntVec v, const IntMat& h) {
  for (const auto& row : h) {
    size_t j = 0;
    while (j < row.size() && row[j].is_zero()) ++j;
    if (j == row.size()) continue;
    BigInt q = fdiv_q(v[j], row[j]);
    if (!q.is_zero()) row_axpy(v, q, row);
  }
  return v;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
  if (a.empty()) throw std::invalid_argument("solve_integer: empty system");
  size_t rows = a.size();
  size_t cols = a[0].size();
  if (b.size() != rows)
    throw std::invalid_argument("solve_integer: size mismatch");

  // The achievable right-hand sides x^T A^T form the row lattice of A^T.
  IntMat at(cols, IntVec(rows, BigInt(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) at[j][i] = a[i][j];
  auto [h, t] = hnf_rows_with_transform(std::move(at));

  IntVec rem = b;
  IntVec coeffs(h.size(), BigInt(0));
  for (size_t i = 0; i < h.size(); ++i) {
    size_t j = 0;
    while (j < rows && h[i][j].is_zero()) ++j;
    if (j == rows) continue;
    if (!divides(h[i][j], rem[j])) return std::nullopt;
    coeffs[i] = divexact(rem[j], h[i][j]);
    row_axpy(rem, coeffs[i], h[i]);
  }
  if (!is_zero_row(rem)) return std::nullopt;

  IntVec x(cols, BigInt(0));
  for (size_t i = 0; i < h.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < cols; ++j) x[j] += coeffs[i] * t[i][j];
  }
  return x;
}

}  // namespace intpoly
