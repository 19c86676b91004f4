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

#ifndef INTPOLY_SPLIT_ANALYSIS_HPP
#define INTPOLY_SPLIT_ANALYSIS_HPP

#include <string>
#include <vector>

#include "intpoly/quad_ideal.hpp"

namespace intpoly {

/// Factorization-shape verification for one completely split prime:
/// p O_K = two distinct conjugate primes of norm p (residue fields F_p).
struct SplitPrimeCheck {
  BigInt p;
  bool distinct = false;
  bool product_is_p = false;
  bool residue_fields_prime = false;

  bool ok() const { return distinct && product_is_p && residue_fields_prime; }
};

/// Primes up to a bound classified by splitting type in Q(sqrt(d)), each
/// type cross-checked against brute-force root counting of the minimal
/// polynomial of omega mod p.  The split set is the data determining the
/// weak polynomial completion of O_K over Z: it is the localization of O_K
/// inverting exactly the completely split primes.
struct SplitAnalysisReport {
  BigInt d;
  BigInt disc;
  BigInt bound;
  std::vector<BigInt> split;
  std::vector<BigInt> ramified;
  std::vector<BigInt> inert;
  std::vector<SplitPrimeCheck> split_checks;
  bool all_verified = false;
  std::string localization_note;
};

SplitAnalysisReport numthm_split_analysis(const BigInt& d,
                                          const BigInt& bound);

}  // namespace intpoly

#endif  // INTPOLY_SPLIT_ANALYSIS_HPP
