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

#ifndef INTPOLY_WPC_HPP
#define INTPOLY_WPC_HPP

#include <optional>
#include <string>
#include <vector>

#include "intpoly/finite_algebra.hpp"

namespace intpoly {

/// Verdicts of the two Frobenius-congruence conditions for one prime: (1)
/// a^p = a (mod pA) quantified over residues of A, computed with full
/// lattice arithmetic, and (2) the Frobenius endomorphism of A/pA is the
/// identity, computed entirely mod p.  The two must agree.
struct PrimeVerdict {
  BigInt p;
  bool cond1 = false;
  bool cond2 = false;
  std::optional<IntVec> witness;  // coordinates of a violating element
};

struct WpcReport {
  std::vector<PrimeVerdict> primes;  // every p with pA != A
  bool overall = false;
  /// The checker certifies the congruence conditions; over Z (which lies in
  /// the class C) these are equivalent to WPC.
  std::string meaning = "congruence conditions (= WPC for D in class C)";
};

WpcReport check_wpc_over_Z(const FiniteAlgebra& algebra);

/// Independent evaluations of the equivalent conditions on A/pA:
/// (2) Frobenius identity, (4) reduced with residue fields of size p,
/// (5) embedding into a power of F_p via idempotent decomposition,
/// (8) the maximal ideals multiply to zero with prime residue fields.
struct ConditionSuite {
  BigInt p;
  bool frobenius_identity = false;           // (2)
  bool reduced_prime_residue_fields = false; // (4)
  bool embeds_in_fp_power = false;           // (5)
  bool maximal_ideal_factorization = false;  // (8)
  bool all_agree = false;
  std::optional<IntVec> witness;
};

ConditionSuite check_condition_suite(const FiniteAlgebra& algebra,
                                     const BigInt& p);

/// Residue budget per (A, p) enumeration.
inline constexpr long kWpcBudget = 1L << 20;

}  // namespace intpoly

#endif  // INTPOLY_WPC_HPP
