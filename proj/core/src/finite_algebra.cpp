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

#include "intpoly/finite_algebra.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "intpoly/membership.hpp"

namespace intpoly {

FiniteAlgebra::FiniteAlgebra(int rank, std::vector<BigInt> mult_tensor,
                             IntMat relations, IntVec unity)
    : rank_(rank), mult_(std::move(mult_tensor)), unity_(std::move(unity)) {
  if (rank_ <= 0) throw std::invalid_argument("FiniteAlgebra: rank >= 1");
  size_t r = static_cast<size_t>(rank_);
  if (mult_.size() != r * r * r)
    throw std::invalid_argument("FiniteAlgebra: tensor must have rank^3 entries");
  if (unity_.size() != r)
    throw std::invalid_argument("FiniteAlgebra: unity must have rank entries");
  for (const auto& row : relations)
    if (row.size() != r)
      throw std::invalid_argument("FiniteAlgebra: relation width mismatch");

  relations_ = hnf_rows(std::move(relations));
  if (relations_.size() != r)
    throw std::invalid_argument(
        "FiniteAlgebra: relation lattice must have full rank (finite quotient)");
  for (size_t i = 0; i < r; ++i)
    if (relations_[i][i].sign() <= 0)
      throw std::invalid_argument("FiniteAlgebra: lattice not full rank");

  unity_ = reduce(std::move(unity_));

  auto basis_vec = [&](size_t i) {
    IntVec v(r, BigInt(0));
    v[i] = BigInt(1);
    return v;
  };

  // Commutativity modulo the lattice and closure of the lattice under
  // multiplication by generators.
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = i + 1; j < r; ++j) {
      if (mul(basis_vec(i), basis_vec(j)) != mul(basis_vec(j), basis_vec(i)))
        throw std::invalid_argument("FiniteAlgebra: tensor not commutative");
    }
  }
  for (const auto& row : relations_) {
    for (size_t i = 0; i < r; ++i) {
      if (!is_zero(mul(row, basis_vec(i))))
        throw std::invalid_argument(
            "FiniteAlgebra: relation lattice is not an ideal");
    }
  }
  // Associativity on generators and the unity axiom, modulo the lattice.
  for (size_t i = 0; i < r; ++i) {
    IntVec ei = basis_vec(i);
    if (reduce(mul(unity_, ei)) != reduce(ei))
      throw std::invalid_argument("FiniteAlgebra: unity fails");
    for (size_t j = 0; j < r; ++j) {
      IntVec ej = basis_vec(j);
      for (size_t k = 0; k < r; ++k) {
        IntVec ek = basis_vec(k);
        if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
          throw std::invalid_argument("FiniteAlgebra: tensor not associative");
      }
    }
  }
}

FiniteAlgebra FiniteAlgebra::cyclic(const BigInt& m) {
  if (m < BigInt(2)) throw std::invalid_argument("cyclic: m >= 2");
  return FiniteAlgebra(1, {BigInt(1)}, {{m}}, {BigInt(1)});
}

const BigInt& FiniteAlgebra::c(int i, int j, int k) const {
  size_t r = static_cast<size_t>(rank_);
  return mult_[(static_cast<size_t>(i) * r + static_cast<size_t>(j)) * r +
               static_cast<size_t>(k)];
}

BigInt FiniteAlgebra::order() const {
  BigInt n(1);
  for (size_t i = 0; i < relations_.size(); ++i) n *= relations_[i][i];
  return n;
}

IntVec FiniteAlgebra::reduce(IntVec v) const {
  return reduce_mod_lattice(std::move(v), relations_);
}

IntVec FiniteAlgebra::add(const IntVec& a, const IntVec& b) const {
  IntVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return reduce(std::move(v));
}

IntVec FiniteAlgebra::mul(const IntVec& a, const IntVec& b) const {
  size_t r = static_cast<size_t>(rank_);
  IntVec v(r, BigInt(0));
  for (size_t i = 0; i < r; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < r; ++j) {
      if (b[j].is_zero()) continue;
      BigInt ab = a[i] * b[j];
      for (size_t k = 0; k < r; ++k) {
        const BigInt& ck = mult_[(i * r + j) * r + k];
        if (!ck.is_zero()) v[k] += ab * ck;
      }
    }
  }
  return reduce(std::move(v));
}

IntVec FiniteAlgebra::pow_elem(const IntVec& a, const BigInt& e) const {
  if (e.sign() <= 0) throw std::domain_error("pow_elem: e >= 1");
  IntVec base = reduce(a);
  IntVec acc;
  bool have = false;
  BigInt k = e;
  while (!k.is_zero()) {
    if (k.is_odd()) {
      acc = have ? mul(acc, base) : base;
      have = true;
    }
    k = k / BigInt(2);
    if (!k.is_zero()) base = mul(base, base);
  }
  return acc;
}

bool FiniteAlgebra::is_zero(const IntVec& v) const {
  IntVec r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<IntVec> FiniteAlgebra::elements(long budget) const {
  BigInt n = order();
  if (!n.fits_long() || n.to_long() > budget)
    throw budget_error("FiniteAlgebra: " + n.str() +
                       " elements exceed the enumeration budget");
  size_t r = static_cast<size_t>(rank_);
  std::vector<IntVec> out;
  out.reserve(static_cast<size_t>(n.to_long()));
  IntVec v(r, BigInt(0));
  while (true) {
    out.push_back(v);
    size_t i = 0;
    for (; i < r; ++i) {
      v[i] += BigInt(1);
      if (v[i] < relations_[i][i]) break;
      v[i] = BigInt(0);
    }
    if (i == r) break;
  }
  return out;
}

FiniteAlgebra FiniteAlgebra::quotient(const IntMat& extra_relations) const {
  IntMat rel = relations_;
  for (const auto& row : extra_relations) rel.push_back(row);
  return FiniteAlgebra(rank_, mult_, std::move(rel), unity_);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  int ra = a.rank(), rb = b.rank();
  int r = ra + rb;
  size_t rs = static_cast<size_t>(r);
  std::vector<BigInt> mult(rs * rs * rs, BigInt(0));
  auto at = [&](int i, int j, int k) -> BigInt& {
    return mult[(static_cast<size_t>(i) * rs + static_cast<size_t>(j)) * rs +
                static_cast<size_t>(k)];
  };
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j)
      for (int k = 0; k < ra; ++k) at(i, j, k) = a.c(i, j, k);
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rb; ++j)
      for (int k = 0; k < rb; ++k) at(ra + i, ra + j, ra + k) = b.c(i, j, k);

  IntMat rel;
  for (const auto& row : a.relations()) {
    IntVec v(rs, BigInt(0));
    for (int i = 0; i < ra; ++i) v[static_cast<size_t>(i)] = row[static_cast<size_t>(i)];
    rel.push_back(std::move(v));
  }
  for (const auto& row : b.relations()) {
    IntVec v(rs, BigInt(0));
    for (int i = 0; i < rb; ++i)
      v[static_cast<size_t>(ra + i)] = row[static_cast<size_t>(i)];
    rel.push_back(std::move(v));
  }
  IntVec unity(rs, BigInt(0));
  for (int i = 0; i < ra; ++i) unity[static_cast<size_t>(i)] = a.unity()[static_cast<size_t>(i)];
  for (int i = 0; i < rb; ++i)
    unity[static_cast<size_t>(ra + i)] = b.unity()[static_cast<size_t>(i)];
  return FiniteAlgebra(r, std::move(mult), std::move(rel), std::move(unity));
}

}  // namespace intpoly
