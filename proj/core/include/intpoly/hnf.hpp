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

#ifndef INTPOLY_HNF_HPP
#define INTPOLY_HNF_HPP

#include <optional>
#include <vector>

#include "intpoly/bigint.hpp"

namespace intpoly {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row-major

/// Row Hermite normal form: same row lattice as the input, zero rows
/// dropped, pivots positive with zeros below and reduced entries above,
/// pivot columns strictly increasing.
IntMat hnf_rows(IntMat m);

/// HNF together with a unimodular transform t (t * m = h, zero rows kept).
struct HnfResult {
  IntMat h;
  IntMat t;
};
HnfResult hnf_rows_with_transform(IntMat m);

/// Canonical representative of v modulo the row lattice of h (h in HNF).
IntVec reduce_mod_lattice(IntVec v, const IntMat& h);

/// Integer solution x of A x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

}  // namespace intpoly

#endif  // INTPOLY_HNF_HPP
