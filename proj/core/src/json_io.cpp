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

#include "intpoly/json_io.hpp"

#include <json.hpp>

namespace intpoly {

namespace {

using json = nlohmann::json;

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

json coeff_json(const Rational& r) {
  return json::array({r.num().str(), r.den().str()});
}

json coeff_json(const QuadElem& e) {
  return json{{"x", coeff_json(e.x())}, {"y", coeff_json(e.y())}};
}

json fp_poly_json(const FpPoly& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.str());
  return arr;
}

json coeff_json(const RatFunc& f) {
  return json{{"num", fp_poly_json(f.num())}, {"den", fp_poly_json(f.den())}};
}

template <class F>
json poly_json(const Poly<F>& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(coeff_json(c));
  return arr;
}

json factored_json(const FactoredIdeal& ideal) {
  json arr = json::array();
  for (const auto& [p, e] : ideal.factors)
    arr.push_back(json::array({p.str(), e.str()}));
  return arr;
}

template <class D>
json basis_json(const RegularBasis<D>& basis) {
  json polys = json::array();
  for (const auto& g : basis.polys) polys.push_back(poly_json(g));
  json sigmas = json::array();
  for (const auto& s : basis.sigmas) sigmas.push_back(coeff_json(s));
  json bez = json::array();
  for (const auto& terms : basis.bezout) {
    json row = json::array();
    for (const auto& [q, a] : terms)
      row.push_back(json{{"q", q.str()}, {"a", coeff_json(a)}});
    bez.push_back(row);
  }
  return json{{"domain", basis.domain.str()},
              {"upto", basis.upto()},
              {"sigmas", sigmas},
              {"polys", polys},
              {"bezout", bez}};
}

template <class D>
json expand_json(const ExpandOutcome<D>& out) {
  json j{{"ok", out.ok}};
  if (out.ok) {
    json coeffs = json::array();
    for (const auto& c : out.coeffs) coeffs.push_back(coeff_json(c));
    j["coeffs"] = coeffs;
  } else {
    j["failed_degree"] = out.failed_degree;
    j["failed_coefficient"] = coeff_json(*out.failed_coefficient);
  }
  return j;
}

BigInt json_to_bigint(const json& v, const char* what) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long>());
  throw std::invalid_argument(std::string("JSON: ") + what +
                              " must be an integer or decimal string");
}

Rational json_to_rational(const json& v, const char* what) {
  if (v.is_string()) return Rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_array() && v.size() == 2)
    return Rational(json_to_bigint(v[0], what), json_to_bigint(v[1], what));
  throw std::invalid_argument(std::string("JSON: ") + what +
                              " must be \"n\", \"n/d\", or [num, den]");
}

}  // namespace

std::string to_json(const FactoredIdeal& ideal, int indent) {
  return dump(json{{"domain", ideal.domain.str()},
                   {"factors", factored_json(ideal)}},
              indent);
}

std::string to_json(const IdealReport& report, int indent) {
  return dump(json{{"domain", report.domain.str()},
                   {"n", report.n.str()},
                   {"characteristic", factored_json(report.characteristic)},
                   {"factorial", factored_json(report.factorial)}},
              indent);
}

std::string to_json(const ClassGroupTable& table, int indent) {
  json forms = json::array();
  for (const auto& f : table.reduced_forms())
    forms.push_back(json{{"a", f.a().str()}, {"b", f.b().str()}});
  return dump(json{{"disc", table.disc().str()},
                   {"h", table.h()},
                   {"reduced_forms", forms},
                   {"table", table.table()}},
              indent);
}

std::string to_json(const PogResult& pog, int indent) {
  return dump(json{{"d", pog.d.str()},
                   {"disc", pog.disc.str()},
                   {"h", pog.h},
                   {"generators", pog.generators},
                   {"subgroup", pog.subgroup},
                   {"order", pog.order},
                   {"is_trivial", pog.is_trivial},
                   {"is_proper", pog.is_proper},
                   {"element_orders", pog.element_orders}},
              indent);
}

std::string to_json(const MembershipResult& result, int indent) {
  json j{{"member", result.member}, {"detail", result.detail}};
  j["witness"] =
      result.witness ? json(domain_elem_str(*result.witness)) : json(nullptr);
  if (result.binomial) {
    json arr = json::array();
    for (const auto& c : *result.binomial) arr.push_back(coeff_json(c));
    j["binomial_certificate"] = arr;
  } else {
    j["binomial_certificate"] = nullptr;
  }
  return dump(j, indent);
}

std::string to_json(const WpcReport& report, int indent) {
  json primes = json::array();
  for (const auto& v : report.primes) {
    json witness = nullptr;
    if (v.witness) {
      json w = json::array();
      for (const auto& x : *v.witness) w.push_back(x.str());
      witness = w;
    }
    primes.push_back(json{{"p", v.p.str()},
                          {"cond1", v.cond1},
                          {"cond2", v.cond2},
                          {"witness", witness}});
  }
  return dump(json{{"primes", primes},
                   {"overall", report.overall},
                   {"meaning", report.meaning}},
              indent);
}

std::string to_json(const ConditionSuite& suite, int indent) {
  json witness = nullptr;
  if (suite.witness) {
    json w = json::array();
    for (const auto& x : *suite.witness) w.push_back(x.str());
    witness = w;
  }
  return dump(
      json{{"p", suite.p.str()},
           {"frobenius_identity", suite.frobenius_identity},
           {"reduced_prime_residue_fields", suite.reduced_prime_residue_fields},
           {"embeds_in_fp_power", suite.embeds_in_fp_power},
           {"maximal_ideal_factorization", suite.maximal_ideal_factorization},
           {"all_agree", suite.all_agree},
           {"witness", witness}},
      indent);
}

std::string to_json(const SplitAnalysisReport& report, int indent) {
  auto prime_list = [](const std::vector<BigInt>& v) {
    json arr = json::array();
    for (const auto& p : v) arr.push_back(p.str());
    return arr;
  };
  json checks = json::array();
  for (const auto& c : report.split_checks)
    checks.push_back(json{{"p", c.p.str()},
                          {"distinct", c.distinct},
                          {"product_is_p", c.product_is_p},
                          {"residue_fields_prime", c.residue_fields_prime}});
  return dump(json{{"d", report.d.str()},
                   {"disc", report.disc.str()},
                   {"bound", report.bound.str()},
                   {"split", prime_list(report.split)},
                   {"ramified", prime_list(report.ramified)},
                   {"inert", prime_list(report.inert)},
                   {"split_checks", checks},
                   {"all_verified", report.all_verified},
                   {"localization_note", report.localization_note}},
              indent);
}

std::string to_json(const LocalPresentationReport& report, int indent) {
  return dump(json{{"p", report.p.str()},
                   {"maxdeg", report.maxdeg},
                   {"relation_levels", report.relation_levels},
                   {"normal_forms_checked", report.normal_forms_checked},
                   {"failures", report.failures},
                   {"pass", report.pass()}},
              indent);
}

std::string to_json(const GlobalRelationsReport& report, int indent) {
  json qs = json::array();
  for (const auto& q : report.qs) qs.push_back(q.str());
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        json{{"q", c.q.str()}, {"level", c.level}, {"ok", c.ok}});
  return dump(json{{"domain", report.domain.str()},
                   {"qs", qs},
                   {"depth", report.depth},
                   {"base_case_ok", report.base_case_ok},
                   {"checks", checks},
                   {"pass", report.pass()}},
              indent);
}

std::string to_json(const RegularBasis<ZDomain>& basis, int indent) {
  return dump(basis_json(basis), indent);
}
std::string to_json(const RegularBasis<ZLocalDomain>& basis, int indent) {
  return dump(basis_json(basis), indent);
}
std::string to_json(const RegularBasis<FpTDomain>& basis, int indent) {
  return dump(basis_json(basis), indent);
}
std::string to_json(const RegularBasis<QuadOrderDomain>& basis, int indent) {
  return dump(basis_json(basis), indent);
}

std::string to_json(const ExpandOutcome<ZDomain>& out, int indent) {
  return dump(expand_json(out), indent);
}
std::string to_json(const ExpandOutcome<ZLocalDomain>& out, int indent) {
  return dump(expand_json(out), indent);
}
std::string to_json(const ExpandOutcome<FpTDomain>& out, int indent) {
  return dump(expand_json(out), indent);
}
std::string to_json(const ExpandOutcome<QuadOrderDomain>& out, int indent) {
  return dump(expand_json(out), indent);
}

std::string poly_to_json(const PolyQ& f, int indent) {
  return dump(json{{"domain", "Z"}, {"coeffs", poly_json(f)}}, indent);
}
std::string poly_to_json(const PolyQuad& f, int indent) {
  return dump(json{{"domain", "Quad:" + f.field().d.str()},
                   {"coeffs", poly_json(f)}},
              indent);
}
std::string poly_to_json(const PolyFpT& f, int indent) {
  return dump(
      json{{"domain", "FpT:" + f.field().p.str()}, {"coeffs", poly_json(f)}},
      indent);
}

FiniteAlgebra parse_finite_algebra(const std::string& text) {
  json j = json::parse(text);
  int rank = j.at("rank").get<int>();
  std::vector<BigInt> mult;
  for (const auto& v : j.at("mult")) mult.push_back(json_to_bigint(v, "mult"));
  IntMat relations;
  for (const auto& row : j.at("relations")) {
    IntVec r;
    for (const auto& v : row) r.push_back(json_to_bigint(v, "relations"));
    relations.push_back(std::move(r));
  }
  IntVec unity;
  for (const auto& v : j.at("unity"))
    unity.push_back(json_to_bigint(v, "unity"));
  return FiniteAlgebra(rank, std::move(mult), std::move(relations),
                       std::move(unity));
}

namespace {

json parse_poly_doc(const std::string& text, const DomainSpec& expected) {
  json j = json::parse(text);
  DomainSpec found = DomainSpec::parse(j.at("domain").get<std::string>());
  if (!(found == expected))
    throw std::invalid_argument("poly file domain " + found.str() +
                                " does not match requested domain " +
                                expected.str());
  return j.at("coeffs");
}

}  // namespace

PolyQ parse_poly_q(const std::string& text, const DomainSpec& expected) {
  json coeffs = parse_poly_doc(text, expected);
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.push_back(json_to_rational(v, "coeff"));
  return PolyQ(RationalField{}, std::move(c));
}

PolyQuad parse_poly_quad(const std::string& text, const QuadOrderDomain& dom) {
  json coeffs = parse_poly_doc(text, dom.spec());
  std::vector<QuadElem> c;
  for (const auto& v : coeffs) {
    if (v.is_object()) {
      c.emplace_back(json_to_rational(v.at("x"), "x"),
                     json_to_rational(v.at("y"), "y"), dom.d());
    } else {
      c.emplace_back(json_to_rational(v, "coeff"), Rational(0), dom.d());
    }
  }
  return PolyQuad(dom.field(), std::move(c));
}

PolyFpT parse_poly_fpt(const std::string& text, const FpTDomain& dom) {
  json coeffs = parse_poly_doc(text, dom.spec());
  std::vector<RatFunc> c;
  for (const auto& v : coeffs) {
    auto read_fp = [&](const json& arr) {
      std::vector<BigInt> digits;
      for (const auto& x : arr) digits.push_back(json_to_bigint(x, "coeff"));
      return FpPoly(dom.p(), std::move(digits));
    };
    if (v.is_object()) {
      FpPoly den = v.contains("den") ? read_fp(v.at("den"))
                                     : FpPoly::constant(dom.p(), 1);
      c.emplace_back(read_fp(v.at("num")), den);
    } else if (v.is_array()) {
      c.emplace_back(read_fp(v));
    } else {
      c.emplace_back(FpPoly::constant(dom.p(), json_to_bigint(v, "coeff")));
    }
  }
  return PolyFpT(dom.field(), std::move(c));
}

}  // namespace intpoly
