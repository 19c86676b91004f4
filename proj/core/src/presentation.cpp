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

#include "intpoly/presentation.hpp"

namespace intpoly {

LocalPresentationReport verify_local_presentation(const ZLocalDomain& dom,
                                                  long maxdeg) {
  if (maxdeg < 1)
    throw std::invalid_argument("verify_local_presentation: maxdeg >= 1");
  LocalPresentationReport out;
  out.p = dom.p();
  out.maxdeg = maxdeg;

  // Digit positions of n <= maxdeg reach j with p^j <= maxdeg; relation at
  // level k mentions level k+1, so the tower goes one deeper.
  int jmax = 0;
  BigInt power = dom.p();
  while (power <= BigInt(maxdeg)) {
    power *= dom.p();
    ++jmax;
  }
  FermatTower<ZLocalDomain> tower(dom, dom.p(), jmax + 1,
                                  /*verify_at_construction=*/false);
  for (int k = 0; k <= jmax; ++k) {
    try {
      tower.verify_relation(k);
    } catch (const std::logic_error& e) {
      out.failures.push_back("relation at level " + std::to_string(k) + ": " +
                             e.what());
    }
  }
  out.relation_levels = jmax + 1;

  // Normal-form monomials prod X_k^(n_k) (digits n_k < p) map to F_{p,n};
  // the table asserts degree n and leading coefficient p^(-w_p(n)), which
  // pins down one image per degree 0..maxdeg.
  FknTable<ZLocalDomain> table(dom, std::move(tower));
  for (long n = 0; n <= maxdeg; ++n) {
    try {
      (void)table.get(n);
      ++out.normal_forms_checked;
    } catch (const std::logic_error& e) {
      out.failures.push_back("normal form at degree " + std::to_string(n) +
                             ": " + e.what());
    }
  }
  return out;
}

}  // namespace intpoly
