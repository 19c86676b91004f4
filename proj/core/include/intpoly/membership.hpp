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

#ifndef INTPOLY_MEMBERSHIP_HPP
#define INTPOLY_MEMBERSHIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "intpoly/domain.hpp"

namespace intpoly {

/// Thrown when an exhaustive enumeration would exceed the desk-scale
/// residue budget; the check fails loudly rather than sampling.
class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decision + witness for f in Int(D).  For Z and Z_(p) the certificate is
/// the binomial-basis expansion; for the other domains the witness of
/// failure is a violating argument.
struct MembershipResult {
  bool member = false;
  std::optional<DomainElem> witness;              // argument with f(a) not in D
  std::optional<std::vector<Rational>> binomial;  // certificate over Z, Z_(p)
  std::string detail;

  explicit operator bool() const { return member; }
};

MembershipResult is_member(const ZDomain& dom, const PolyQ& f);
MembershipResult is_member(const ZLocalDomain& dom, const PolyQ& f);
MembershipResult is_member(const FpTDomain& dom, const PolyFpT& f);
MembershipResult is_member(const QuadOrderDomain& dom, const PolyQuad& f);

/// Residue budget for the exhaustive checks.
inline constexpr long kMembershipBudget = 1L << 22;

}  // namespace intpoly

#endif  // INTPOLY_MEMBERSHIP_HPP
