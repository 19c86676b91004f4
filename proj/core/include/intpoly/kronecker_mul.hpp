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

#ifndef INTPOLY_KRONECKER_MUL_HPP
#define INTPOLY_KRONECKER_MUL_HPP

#include <vector>

#include "intpoly/bigint.hpp"
#include "intpoly/rational.hpp"

namespace intpoly::detail {

/// Convolution of signed integer coefficient vectors.  Large products are
/// routed through a single GMP multiplication by Kronecker substitution:
/// coefficients packed into word-aligned slots, sign handled by splitting
/// into nonnegative parts.
std::vector<BigInt> convolve(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b);

/// Dense product of rational coefficient vectors: clears each side to a
/// common denominator, convolves the integer parts, and restores canonical
/// rationals.
std::vector<Rational> mul_rational_dense(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b);

}  // namespace intpoly::detail

#endif  // INTPOLY_KRONECKER_MUL_HPP
