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

#ifndef INTPOLY_IDEAL_REPORT_HPP
#define INTPOLY_IDEAL_REPORT_HPP

#include "intpoly/domain.hpp"
#include "intpoly/wexp.hpp"

namespace intpoly {

/// Factored characteristic ideal (negative exponents) and factorial ideal
/// (its inverse) of degree n: the exponent of a prime of norm q is
/// -w_q(n) resp. w_q(n).
struct IdealReport {
  DomainSpec domain;
  BigInt n;
  FactoredIdeal characteristic;
  FactoredIdeal factorial;
};

IdealReport ideal_report(const DomainSpec& domain, const BigInt& n);

}  // namespace intpoly

#endif  // INTPOLY_IDEAL_REPORT_HPP
