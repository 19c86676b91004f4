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

#ifndef INTPOLY_JSON_IO_HPP
#define INTPOLY_JSON_IO_HPP

#include <string>

#include "intpoly/finite_algebra.hpp"
#include "intpoly/ideal_report.hpp"
#include "intpoly/membership.hpp"
#include "intpoly/presentation.hpp"
#include "intpoly/regular_basis.hpp"
#include "intpoly/split_analysis.hpp"
#include "intpoly/wpc.hpp"

namespace intpoly {

// All emitters produce deterministic documents: keys are sorted, unbounded
// integers are decimal strings, rational coefficients are ["num","den"]
// pairs in ascending degree order.  indent < 0 emits compact JSON.

std::string to_json(const FactoredIdeal& ideal, int indent = -1);
std::string to_json(const IdealReport& report, int indent = -1);
std::string to_json(const ClassGroupTable& table, int indent = -1);
std::string to_json(const PogResult& pog, int indent = -1);
std::string to_json(const MembershipResult& result, int indent = -1);
std::string to_json(const WpcReport& report, int indent = -1);
std::string to_json(const ConditionSuite& suite, int indent = -1);
std::string to_json(const SplitAnalysisReport& report, int indent = -1);
std::string to_json(const LocalPresentationReport& report, int indent = -1);
std::string to_json(const GlobalRelationsReport& report, int indent = -1);

std::string to_json(const RegularBasis<ZDomain>& basis, int indent = -1);
std::string to_json(const RegularBasis<ZLocalDomain>& basis, int indent = -1);
std::string to_json(const RegularBasis<FpTDomain>& basis, int indent = -1);
std::string to_json(const RegularBasis<QuadOrderDomain>& basis,
                    int indent = -1);

std::string to_json(const ExpandOutcome<ZDomain>& out, int indent = -1);
std::string to_json(const ExpandOutcome<ZLocalDomain>& out, int indent = -1);
std::string to_json(const ExpandOutcome<FpTDomain>& out, int indent = -1);
std::string to_json(const ExpandOutcome<QuadOrderDomain>& out,
                    int indent = -1);

std::string poly_to_json(const PolyQ& f, int indent = -1);
std::string poly_to_json(const PolyQuad& f, int indent = -1);
std::string poly_to_json(const PolyFpT& f, int indent = -1);

/// Parses {"rank": r, "mult": [r^3 ints], "relations": [[...]], "unity":
/// [...]}; integer entries may be numbers or decimal strings.
FiniteAlgebra parse_finite_algebra(const std::string& text);

/// Parses {"domain": "...", "coeffs": [...]} against an expected domain.
PolyQ parse_poly_q(const std::string& text, const DomainSpec& expected);
PolyQuad parse_poly_quad(const std::string& text, const QuadOrderDomain& dom);
PolyFpT parse_poly_fpt(const std::string& text, const FpTDomain& dom);

}  // namespace intpoly

#endif  // INTPOLY_JSON_IO_HPP
