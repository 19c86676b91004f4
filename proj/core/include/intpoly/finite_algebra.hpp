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

#ifndef INTPOLY_FINITE_ALGEBRA_HPP
#define INTPOLY_FINITE_ALGEBRA_HPP

#include <vector>

#include "intpoly/hnf.hpp"

namespace intpoly {

/// Finite commutative Z-algebra given by structure constants on generators
/// e_0..e_{r-1} (e_i e_j = sum_k c_{ijk} e_k) and a full-rank additive
/// relation lattice, stored in Hermite normal form.  Elements are canonical
/// coordinate vectors modulo the lattice.  Commutativity, associativity on
/// generators, the unity axiom, and closure of the lattice under
/// multiplication are all checked at construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra(int rank, std::vector<BigInt> mult_tensor, IntMat relations,
                IntVec unity);

  /// Z/m as a rank-1 algebra.
  static FiniteAlgebra cyclic(const BigInt& m);

  int rank() const { return rank_; }
  const IntMat& relations() const { return relations_; }
  const IntVec& unity() const { return unity_; }
  const BigInt& c(int i, int j, int k) const;

  /// Number of elements (product of the HNF diagonal).
  BigInt order() const;

  IntVec reduce(IntVec v) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec mul(const IntVec& a, const IntVec& b) const;
  IntVec pow_elem(const IntVec& a, const BigInt& e) const;
  bool is_zero(const IntVec& v) const;

  /// All canonical representatives; throws budget_error past the cap.
  std::vector<IntVec> elements(long budget) const;

  /// Quotient by additional relation rows (must stay finite).
  FiniteAlgebra quotient(const IntMat& extra_relations) const;

 private:
  int rank_;
  std::vector<BigInt> mult_;  // r^3, row-major (i, j, k)
  IntMat relations_;          // HNF, full rank
  IntVec unity_;
};

/// A x B with blockwise generators and relations.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace intpoly

#endif  // INTPOLY_FINITE_ALGEBRA_HPP
