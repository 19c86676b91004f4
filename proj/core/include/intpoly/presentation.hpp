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

#ifndef INTPOLY_PRESENTATION_HPP
#define INTPOLY_PRESENTATION_HPP

#include <string>
#include <vector>

#include "intpoly/regular_basis.hpp"

namespace intpoly {

/// Bounded-degree certificate for the local presentation of Int(Z_(p)):
/// the rewrite system's normal-form monomials map to polynomials F_{p,n}
/// whose degrees exhaust 0..maxdeg exactly once with leading coefficients
/// p^(-w_p(n)), and every defining relation maps to zero exactly.
struct LocalPresentationReport {
  BigInt p;
  long maxdeg = 0;
  int relation_levels = 0;        // relations verified at levels 0..k-1
  long normal_forms_checked = 0;  // one per degree
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

LocalPresentationReport verify_local_presentation(const ZLocalDomain& dom,
                                                  long maxdeg);

/// Exact verification of one relation instance of the global presentation.
struct RelationCheck {
  BigInt q;
  int level = 0;
  bool ok = false;
};

struct GlobalRelationsReport {
  DomainSpec domain;
  std::vector<BigInt> qs;
  int depth = 0;
  bool base_case_ok = false;  // level 0 equals X for every q
  std::vector<RelationCheck> checks;

  bool pass() const {
    if (!base_case_ok) return false;
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Verifies (F_q^(k))^q - F_q^(k) - pi_q F_q^(k+1) = 0 exactly for every
/// q in qs and k < depth.  Requires Pi_q principal for each q.
template <GroundDomain D>
GlobalRelationsReport verify_global_relations(const D& dom,
                                              const std::vector<BigInt>& qs,
                                              int depth) {
  GlobalRelationsReport out;
  out.domain = dom.spec();
  out.qs = qs;
  out.depth = depth;
  out.base_case_ok = true;
  for (const BigInt& q : qs) {
    FermatTower<D> tower(dom, q, depth, /*verify_at_construction=*/false);
    using P = typename FermatTower<D>::P;
    if (!(tower.level(0) == P::variable(dom.field())))
      out.base_case_ok = false;
    for (int k = 0; k < depth; ++k) {
      RelationCheck check{q, k, false};
      try {
        tower.verify_relation(k);
        check.ok = true;
      } catch (const std::logic_error&) {
        check.ok = false;
      }
      out.checks.push_back(check);
    }
  }
  return out;
}

}  // namespace intpoly

#endif  // INTPOLY_PRESENTATION_HPP
