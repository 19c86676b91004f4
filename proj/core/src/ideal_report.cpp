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

#include "intpoly/ideal_report.hpp"

namespace intpoly {

IdealReport ideal_report(const DomainSpec& domain, const BigInt& n) {
  if (n.sign() < 0) throw std::invalid_argument("ideal_report: n >= 0");
  IdealReport out{domain, n, {domain, {}}, {domain, {}}};
  for (auto& prime : primes_of_norm_at_most(domain, n)) {
    BigInt w = factorial_exponent(prime.norm, n);
    if (w.is_zero()) continue;
    out.characteristic.factors.emplace_back(prime, -w);
    out.factorial.factors.emplace_back(std::move(prime), w);
  }
  out.characteristic.normalize();
  out.factorial.normalize();
  return out;
}

}  // namespace intpoly
