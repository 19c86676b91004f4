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

#include "intpoly/split_analysis.hpp"

#include <stdexcept>

namespace intpoly {

namespace {

// Splitting type by brute-force root counting of the minimal polynomial of
// omega over F_p -- independent of the Kronecker-symbol classification.
SplitType splitting_by_roots(const BigInt& disc, const BigInt& p) {
  if (divides(p, disc)) return SplitType::kRamified;
  // x^2 - d for even disc (omega = sqrt(d)); x^2 - x + (1-d)/4 for odd.
  BigInt d = disc.is_even() ? divexact(disc, BigInt(4)) : disc;
  long roots = 0;
  for (BigInt x(0); x < p; x += BigInt(1)) {
    BigInt value = disc.is_even()
                       ? x * x - d
                       : x * x - x + divexact(BigInt(1) - d, BigInt(4));
    if (fdiv_r(value, p).is_zero()) ++roots;
  }
  // Away from ramification the minimal polynomial has 0 or 2 roots mod p
  // (for p = 2 and odd disc, f(0) = f(1), so the count still lands there).
  if (roots == 2) return SplitType::kSplit;
  if (roots == 0) return SplitType::kInert;
  throw std::logic_error("splitting_by_roots: unexpected root count");
}

}  // namespace

SplitAnalysisReport numthm_split_analysis(const BigInt& d,
                                          const BigInt& bound) {
  if (bound < BigInt(2))
    throw std::invalid_argument("numthm_split_analysis: bound >= 2");
  SplitAnalysisReport report;
  report.d = d;
  report.disc = fundamental_discriminant(d);
  report.bound = bound;
  report.all_verified = true;

  for (BigInt p(2); p <= bound; p += BigInt(1)) {
    if (!is_prime(p)) continue;
    SplitType st = splitting_type(report.disc, p);
    if (st != splitting_by_roots(report.disc, p))
      throw std::logic_error(
          "numthm_split_analysis: Kronecker and root-count classifications "
          "disagree at p = " +
          p.str());
    switch (st) {
      case SplitType::kSplit: {
        report.split.push_back(p);
        auto primes = primes_above(report.disc, p);
        SplitPrimeCheck check;
        check.p = p;
        check.distinct = primes.size() == 2 && !(primes[0] == primes[1]);
        check.product_is_p =
            check.distinct &&
            primes[0] * primes[1] ==
                QuadIdeal::principal_integer(report.disc, p);
        check.residue_fields_prime =
            primes.size() == 2 && primes[0].norm() == p &&
            primes[1].norm() == p;
        report.all_verified = report.all_verified && check.ok();
        report.split_checks.push_back(std::move(check));
        break;
      }
      case SplitType::kRamified:
        report.ramified.push_back(p);
        break;
      case SplitType::kInert:
        report.inert.push_back(p);
        break;
    }
  }
  report.localization_note =
      "w_Z(O_K) = S^-1 O_K inverts exactly the completely split primes; "
      "S is the complement of the union of the listed split primes "
      "(the class group of Z is trivial, hence torsion)";
  return report;
}

}  // namespace intpoly
