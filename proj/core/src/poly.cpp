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

#include "intpoly/poly.hpp"

namespace intpoly {

std::vector<Rational> binomial_basis(const PolyQ& f) {
  int n = f.degree();
  if (n < 0) return {Rational(0)};
  std::vector<Rational> v;
  v.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v.push_back(f.eval(Rational(j)));
  for (int k = 1; k <= n; ++k)
    for (int j = n; j >= k; --j)
      v[static_cast<size_t>(j)] -= v[static_cast<size_t>(j - 1)];
  return v;
}

PolyQ binomial_poly(int n) {
  if (n < 0) throw std::domain_error("binomial_poly: n >= 0");
  RationalField f;
  PolyQ acc = PolyQ::constant(f, Rational(1));
  BigInt factorial(1);
  for (int i = 0; i < n; ++i) {
    acc = acc * PolyQ(f, {Rational(-i), Rational(1)});
    factorial *= BigInt(i + 1);
  }
  return acc.scaled(Rational(BigInt(1), factorial));
}

PolyQ from_binomial_basis(const std::vector<Rational>& c) {
  RationalField f;
  PolyQ acc = PolyQ::zero(f);
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += binomial_poly(static_cast<int>(k)).scaled(c[k]);
  }
  return acc;
}

}  // namespace intpoly
