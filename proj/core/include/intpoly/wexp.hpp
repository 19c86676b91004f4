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

#ifndef INTPOLY_WEXP_HPP
#define INTPOLY_WEXP_HPP

#include <stdexcept>

#include "intpoly/bigint.hpp"

namespace intpoly {

/// w_k(n) = sum_{i>=1} floor(n / k^i), the exponent of Pi_k in the n-th
/// factorial ideal.  Also equals (n - digitsum_k(n)) / (k - 1); both
/// formulas are evaluated and must agree.
inline BigInt factorial_exponent(const BigInt& k, const BigInt& n) {
  if (k <= BigInt(1)) throw std::domain_error("factorial_exponent: k > 1");
  if (n.sign() < 0) throw std::domain_error("factorial_exponent: n >= 0");
  BigInt by_floors(0);
  BigInt m = n;
  while (!m.is_zero()) {
    m = fdiv_q(m, k);
    by_floors += m;
  }
  BigInt digit_sum(0);
  m = n;
  while (!m.is_zero()) {
    digit_sum += fdiv_r(m, k);
    m = fdiv_q(m, k);
  }
  BigInt by_digits = divexact(n - digit_sum, k - BigInt(1));
  if (by_floors != by_digits)
    throw std::logic_error("factorial_exponent: formulas disagree");
  return by_floors;
}

inline long factorial_exponent(long k, long n) {
  return factorial_exponent(BigInt(k), BigInt(n)).to_long();
}

/// Base-k digits of n, least significant first (empty for n = 0).
inline std::vector<BigInt> digits(const BigInt& k, const BigInt& n) {
  if (k <= BigInt(1)) throw std::domain_error("digits: k > 1");
  if (n.sign() < 0) throw std::domain_error("digits: n >= 0");
  std::vector<BigInt> out;
  BigInt m = n;
  while (!m.is_zero()) {
    out.push_back(fdiv_r(m, k));
    m = fdiv_q(m, k);
  }
  return out;
}

}  // namespace intpoly

#endif  // INTPOLY_WEXP_HPP
