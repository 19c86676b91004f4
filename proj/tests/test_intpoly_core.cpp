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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intpoly/ideal_report.hpp"
#include "intpoly/membership.hpp"
#include "intpoly/presentation.hpp"
#include "intpoly/regular_basis.hpp"

using namespace intpoly;

namespace {

PolyQ pq(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.emplace_back(s);
  return PolyQ(RationalField{}, std::move(c));
}

BigInt factorial(long n) {
  BigInt f(1);
  for (long i = 2; i <= n; ++i) f *= BigInt(i);
  return f;
}

}  // namespace

TEST_CASE("w exponent examples") {
  CHECK(factorial_exponent(2, 4) == 3);
  CHECK(factorial_exponent(2, 1) == 0);
  CHECK(factorial_exponent(7, 3) == 0);  // k > n
  CHECK(factorial_exponent(3, 10) == 4);
  CHECK_THROWS_AS(factorial_exponent(BigInt(1), BigInt(5)), std::domain_error);
}

TEST_CASE("w equals the p-adic valuation of n! (literal factorials)") {
  BigInt fact(1);
  for (long n = 1; n <= 300; ++n) {
    fact *= BigInt(n);
    for (long p = 2; p <= n; ++p) {
      if (!is_prime(BigInt(p))) continue;
      CHECK(factorial_exponent(p, n) == valuation(fact, BigInt(p)));
    }
  }
}

TEST_CASE("fermat towers over Z") {
  ZDomain z;
  FermatTower<ZDomain> t2(z, BigInt(2), 2);
  CHECK(t2.pi() == Rational(2));
  CHECK(t2.level(1) == pq({"0", "-1/2", "1/2"}));
  CHECK(t2.level(2) == pq({"0", "2/8", "-1/8", "-2/8", "1/8"}));
  CHECK(t2.level(2).degree() == 4);

  // Unit Pi: F_4 = X^4 - X.
  FermatTower<ZDomain> t4(z, BigInt(4), 1);
  CHECK(t4.pi() == Rational(1));
  CHECK(t4.level(1) == pq({"0", "-1", "0", "0", "1"}));

  CHECK_THROWS_AS(FermatTower<ZDomain>(z, BigInt(6), 1),
                  std::invalid_argument);
}

TEST_CASE("fermat tower over F_2[T]") {
  FpTDomain d(BigInt(2));
  FermatTower<FpTDomain> t(d, BigInt(2), 3);
  // pi_2 = T^2 + T and F_2 = (X^2 - X)/(T^2 + T); relations are verified
  // exactly at construction.
  CHECK(t.pi().str() == "T^2+T");
  CHECK(t.level(1).degree() == 2);
  CHECK(t.level(3).degree() == 8);
}

TEST_CASE("fermat tower obstruction over a non-Polya order") {
  QuadOrderDomain d(BigInt(-5));
  CHECK_THROWS_AS(FermatTower<QuadOrderDomain>(d, BigInt(2), 1),
                  polya_obstruction_error);
  try {
    FermatTower<QuadOrderDomain> t(d, BigInt(2), 1);
  } catch (const polya_obstruction_error& e) {
    CHECK(e.q() == BigInt(2));
    CHECK(e.info().find("class") != std::string::npos);
  }
}

TEST_CASE("f_kn degree and leading coefficient") {
  ZDomain z;
  // k = 2, n = 3 (digits 1,1): X * F_2, degree 3, leading 1/2.
  auto f23 = f_kn(z, BigInt(2), BigInt(3));
  CHECK(f23.degree() == 3);
  CHECK(f23.leading() == Rational(BigInt(1), BigInt(2)));
  CHECK(f23 == PolyQ::variable(RationalField{}) * pq({"0", "-1/2", "1/2"}));

  CHECK(f_kn(z, BigInt(2), BigInt(1)) == PolyQ::variable(RationalField{}));

  // k = 3, n = 9: (F_3^(2))^1, leading 3^-4 since w_3(9) = 4.
  auto f39 = f_kn(z, BigInt(3), BigInt(9));
  CHECK(f39.degree() == 9);
  CHECK(f39.leading() == Rational(BigInt(1), BigInt(81)));
  FermatTower<ZDomain> t3(z, BigInt(3), 2);
  CHECK(f39 == t3.level(2));
}

TEST_CASE("sigma over Z is 1/n!") {
  ZDomain z;
  for (long n = 0; n <= 60; ++n)
    CHECK(sigma(z, n) == Rational(BigInt(1), factorial(n)));
}

TEST_CASE("regular basis over Z, small") {
  ZDomain z;
  auto outcome = build_regular_basis(z, 3);
  REQUIRE(outcome.ok());
  const auto& basis = *outcome.basis;
  CHECK(basis.polys[0] == pq({"1"}));
  CHECK(basis.polys[1] == pq({"0", "1"}));
  // Single-term Bezout at n = 2: a_{2,2} = 1 and G_2 = F_2.
  REQUIRE(basis.bezout[2].size() == 1);
  CHECK(basis.bezout[2][0].first == BigInt(2));
  CHECK(basis.bezout[2][0].second == Rational(1));
  CHECK(basis.polys[2] == pq({"0", "-1/2", "1/2"}));
  CHECK(basis.sigmas[2] == Rational(BigInt(1), BigInt(2)));
  CHECK(basis.sigmas[3] == Rational(BigInt(1), BigInt(6)));
}

TEST_CASE("regular basis over the Gaussian integers, N = 8") {
  QuadOrderDomain d(BigInt(-1));
  auto outcome = build_regular_basis(d, 8);
  REQUIRE(outcome.ok());
  const auto& basis = *outcome.basis;
  for (long n = 0; n <= 8; ++n) {
    CHECK(basis.polys[static_cast<size_t>(n)].degree() == n);
    CHECK(is_member(d, basis.polys[static_cast<size_t>(n)]).member);
  }
}

TEST_CASE("regular basis obstruction for non-Polya orders") {
  QuadOrderDomain d5(BigInt(-5));
  auto outcome = build_regular_basis(d5, 10);
  REQUIRE(!outcome.ok());
  CHECK(outcome.obstruction->q == BigInt(2));
  CHECK(!outcome.obstruction->info.empty());
}

TEST_CASE("membership over Z") {
  ZDomain z;
  auto member = is_member(z, pq({"0", "-1/2", "1/2"}));
  CHECK(member.member);
  REQUIRE(member.binomial.has_value());
  CHECK(*member.binomial ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1)});

  auto non = is_member(z, pq({"0", "0", "1/2"}));  // X^2/2
  CHECK(!non.member);
  REQUIRE(non.witness.has_value());
  CHECK(std::get<Rational>(*non.witness) == Rational(1));  // witness a = 1
}

TEST_CASE("membership over Z_(p)") {
  ZLocalDomain z2(BigInt(2));
  CHECK(is_member(z2, pq({"0", "-1/2", "1/2"})).member);
  CHECK(!is_member(z2, pq({"0", "0", "1/2"})).member);
  // Denominators prime to p are allowed: X/3 is in Int(Z_(2)).
  CHECK(is_member(z2, pq({"0", "1/3"})).member);
  ZLocalDomain z3(BigInt(3));
  CHECK(!is_member(z3, pq({"0", "1/3"})).member);
}

TEST_CASE("membership over a quadratic order with residue witness") {
  QuadOrderDomain d(BigInt(-5));
  QuadField f = d.field();
  Rational half(BigInt(1), BigInt(2));
  // (X^2 - X)/2 is NOT integer-valued on O_K: witness omega = sqrt(-5).
  PolyQuad g(f, {f.zero(), QuadElem(-half, Rational(0), BigInt(-5)),
                 QuadElem(half, Rational(0), BigInt(-5))});
  auto r = is_member(d, g);
  CHECK(!r.member);
  REQUIRE(r.witness.has_value());
  CHECK(std::get<QuadElem>(*r.witness) ==
        QuadElem(Rational(0), Rational(1), BigInt(-5)));

  // Integer-coefficient polynomials are members.
  PolyQuad h(f, {f.one(), f.one(), f.one()});
  CHECK(is_member(d, h).member);
}

TEST_CASE("membership over odd-discriminant quadratic orders") {
  // d = -7: 2 splits (disc = -7 is 1 mod 8), so (X^2 - X)/2 is
  // integer-valued on the maximal order Z[(1+sqrt(-7))/2].
  QuadOrderDomain d7(BigInt(-7));
  QuadField f7 = d7.field();
  Rational half(BigInt(1), BigInt(2));
  PolyQuad g7(f7, {f7.zero(), QuadElem(-half, Rational(0), BigInt(-7)),
                   QuadElem(half, Rational(0), BigInt(-7))});
  CHECK(is_member(d7, g7).member);

  // d = -3: 2 is inert (disc = -3 is 5 mod 8), residue field F_4, so the
  // same polynomial fails with witness omega = (1+sqrt(-3))/2.
  QuadOrderDomain d3(BigInt(-3));
  QuadField f3 = d3.field();
  PolyQuad g3(f3, {f3.zero(), QuadElem(-half, Rational(0), BigInt(-3)),
                   QuadElem(half, Rational(0), BigInt(-3))});
  auto r = is_member(d3, g3);
  CHECK(!r.member);
  REQUIRE(r.witness.has_value());
  CHECK(std::get<QuadElem>(*r.witness) == d3.from_coords(BigInt(0), BigInt(1)));

  // Half-integers like (1+sqrt(-7))/2 are integral; (1+sqrt(-7))/3 is not.
  CHECK(d7.is_integral(QuadElem(half, half, BigInt(-7))));
  CHECK(!d7.is_integral(
      QuadElem(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(3)),
               BigInt(-7))));
}

TEST_CASE("regular basis and towers over Q(sqrt(-3))") {
  // Odd discriminant with a ramified prime: pi_3 = sqrt(-3) up to units.
  QuadOrderDomain d3(BigInt(-3));
  auto pi3 = d3.pi_generator(BigInt(3));
  REQUIRE(pi3.has_value());
  CHECK(pi3->norm() == Rational(3));
  // Pi_2 is the unit ideal (2 inert: the only norm-4 prime is (2)).
  CHECK(*d3.pi_generator(BigInt(2)) == d3.field().one());
  auto pi4 = d3.pi_generator(BigInt(4));
  REQUIRE(pi4.has_value());
  CHECK(pi4->norm() == Rational(4));

  auto outcome = build_regular_basis(d3, 6);
  REQUIRE(outcome.ok());
  for (long n = 0; n <= 6; ++n) {
    const auto& g = outcome.basis->polys[static_cast<size_t>(n)];
    CHECK(g.degree() == n);
    CHECK(is_member(d3, g).member);
  }
}

TEST_CASE("global relations over quadratic orders") {
  QuadOrderDomain gauss(BigInt(-1));
  auto r = verify_global_relations(gauss, {BigInt(2), BigInt(5)}, 2);
  CHECK(r.pass());
  QuadOrderDomain d3(BigInt(-3));
  auto r3 = verify_global_relations(d3, {BigInt(3), BigInt(4)}, 2);
  CHECK(r3.pass());
}

TEST_CASE("global relations over F_3[T]") {
  FpTDomain d(BigInt(3));
  auto r = verify_global_relations(d, {BigInt(3), BigInt(9)}, 2);
  CHECK(r.pass());
}

TEST_CASE("regular basis over F_2[T] with membership") {
  FpTDomain d(BigInt(2));
  auto outcome = build_regular_basis(d, 6);
  REQUIRE(outcome.ok());
  for (long n = 0; n <= 6; ++n) {
    const auto& g = outcome.basis->polys[static_cast<size_t>(n)];
    CHECK(g.degree() == n);
    CHECK(is_member(d, g).member);
  }
  // sigma_2 = 1/(T^2+T).
  RatFunc t(FpPoly::variable(BigInt(2)));
  CHECK(outcome.basis->sigmas[2] == (t * t + t).inverse());
}

TEST_CASE("membership over F_p[T]") {
  FpTDomain d(BigInt(2));
  RatFuncField f = d.field();
  RatFunc t(FpPoly::variable(BigInt(2)));
  RatFunc pi2 = t * t + t;  // T^2 + T
  // F_2 = (X^2 - X)/(T^2 + T) is a member.
  PolyFpT fermat(f, {f.zero(), f.zero() - pi2.inverse(), pi2.inverse()});
  CHECK(is_member(d, fermat).member);
  // (X^2 - X)/T^2 fails at X = T.
  RatFunc t2inv = (t * t).inverse();
  PolyFpT bad(f, {f.zero(), f.zero() - t2inv, t2inv});
  auto r = is_member(d, bad);
  CHECK(!r.member);
  REQUIRE(r.witness.has_value());
  CHECK(std::get<RatFunc>(*r.witness) == t);
}

TEST_CASE("expand in basis") {
  ZDomain z;
  auto outcome = build_regular_basis(z, 6);
  REQUIRE(outcome.ok());
  const auto& basis = *outcome.basis;

  // G_3 expands to the unit vector e_3.
  auto e3 = expand_in_basis(basis.polys[3], basis, z);
  REQUIRE(e3.ok);
  CHECK(e3.coeffs == std::vector<Rational>{Rational(0), Rational(0),
                                           Rational(0), Rational(1)});

  // binom(X, 4) has integer coefficients in the basis, and the combination
  // reconstructs it bit-exactly.
  auto c4 = expand_in_basis(binomial_poly(4), basis, z);
  REQUIRE(c4.ok);
  PolyQ rebuilt = PolyQ::zero(RationalField{});
  for (size_t n = 0; n < c4.coeffs.size(); ++n) {
    CHECK(c4.coeffs[n].is_integer());
    rebuilt += basis.polys[n].scaled(c4.coeffs[n]);
  }
  CHECK(rebuilt == binomial_poly(4));

  // X^2/2 fails: the elimination hits a non-integral coefficient.
  auto bad = expand_in_basis(pq({"0", "0", "1/2"}), basis, z);
  CHECK(!bad.ok);
  CHECK(bad.failed_degree == 1);
  CHECK(*bad.failed_coefficient == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("ideal reports") {
  // n!_Z = (n!) exponent by exponent.
  for (long n : {0L, 1L, 5L, 20L, 97L}) {
    IdealReport r = ideal_report(DomainSpec::integers(), BigInt(n));
    BigInt rebuilt(1);
    for (const auto& [p, e] : r.factorial.factors) {
      const BigInt& prime = std::get<BigInt>(p.data);
      CHECK(e == factorial_exponent(prime, BigInt(n)));
      rebuilt *= pow(prime, e);
    }
    CHECK(rebuilt == factorial(n));
    // characteristic = inverse of factorial.
    REQUIRE(r.characteristic.factors.size() == r.factorial.factors.size());
    for (size_t i = 0; i < r.factorial.factors.size(); ++i)
      CHECK(r.characteristic.factors[i].second ==
            -r.factorial.factors[i].second);
  }
  // n = 0, 1 give the unit ideal.
  CHECK(ideal_report(DomainSpec::integers(), BigInt(0)).factorial.is_unit());
  CHECK(ideal_report(DomainSpec::integers(), BigInt(1)).factorial.is_unit());

  // 4!_{F_2[T]} = (T^2+T)^3 (T^2+T+1): primewise (T)^3 (T+1)^3 (T^2+T+1).
  IdealReport r = ideal_report(DomainSpec::finite_field_poly(BigInt(2)),
                               BigInt(4));
  REQUIRE(r.factorial.factors.size() == 3);
  CHECK(r.factorial.factors[0].first.str() == "T");
  CHECK(r.factorial.factors[0].second == BigInt(3));
  CHECK(r.factorial.factors[1].first.str() == "T+1");
  CHECK(r.factorial.factors[1].second == BigInt(3));
  CHECK(r.factorial.factors[2].first.str() == "T^2+T+1");
  CHECK(r.factorial.factors[2].second == BigInt(1));
  // As a generator product this is exactly (T^2+T)^3 (T^2+T+1).
  auto gen = principal_generator(r.factorial);
  FpPoly t = FpPoly::variable(BigInt(2));
  FpPoly pi2 = t * t + t;
  FpPoly pi4 = t * t + t + FpPoly::constant(BigInt(2), 1);
  CHECK(std::get<RatFunc>(*gen).num() == pi2 * pi2 * pi2 * pi4);
}

TEST_CASE("local presentation certificate") {
  ZLocalDomain z2(BigInt(2));
  auto report = verify_local_presentation(z2, 64);
  CHECK(report.pass());
  CHECK(report.normal_forms_checked == 65);
  CHECK(report.relation_levels == 7);  // levels 0..6 (2^6 = 64 <= 64)

  ZLocalDomain z3(BigInt(3));
  auto r3 = verify_local_presentation(z3, 30);
  CHECK(r3.pass());

  // The degree-10 normal form over Z_(3): digits (1,0,1), image X*F_3^(2),
  // leading coefficient 3^-4.
  auto f = f_kn(z3, BigInt(3), BigInt(10));
  CHECK(f.degree() == 10);
  CHECK(f.leading() == Rational(BigInt(1), BigInt(81)));
}

TEST_CASE("global relations") {
  ZDomain z;
  auto r = verify_global_relations(z, {BigInt(2), BigInt(3), BigInt(5)}, 2);
  CHECK(r.pass());
  CHECK(r.checks.size() == 6);

  FpTDomain d(BigInt(2));
  auto rf = verify_global_relations(d, {BigInt(2), BigInt(4)}, 2);
  CHECK(rf.pass());
}

TEST_CASE("w superadditivity and chain monotonicity, sampled") {
  for (long k = 2; k <= 40; ++k) {
    for (long m = 0; m <= 60; ++m) {
      for (long n = 0; n <= 60; ++n) {
        CHECK(factorial_exponent(k, m + n) >=
              factorial_exponent(k, m) + factorial_exponent(k, n));
      }
    }
  }
  for (long q = 2; q <= 30; ++q)
    for (long n = 1; n <= 120; ++n)
      CHECK(factorial_exponent(q, n) >= factorial_exponent(q, n - 1));
}

TEST_CASE("localization exponent agreement") {
  // The p-exponent of the characteristic ideal over Z matches the exponent
  // computed in Z_(p).
  for (long p : {2, 3, 5}) {
    auto loc = DomainSpec::localized_integers(BigInt(p));
    for (long n : {2L, 7L, 24L, 50L}) {
      IdealReport global = ideal_report(DomainSpec::integers(), BigInt(n));
      IdealReport local = ideal_report(loc, BigInt(n));
      BigInt global_exp(0);
      for (const auto& [pd, e] : global.characteristic.factors)
        if (std::get<BigInt>(pd.data) == BigInt(p)) global_exp = e;
      BigInt local_exp(0);
      for (const auto& [pd, e] : local.characteristic.factors)
        if (std::get<BigInt>(pd.data) == BigInt(p)) local_exp = e;
      CHECK(global_exp == local_exp);
      CHECK(local_exp == -factorial_exponent(p, n));
    }
  }
}

TEST_CASE("basis round trip and membership coherence, randomized") {
  std::mt19937_64 rng(7);
  ZDomain z;
  auto outcome = build_regular_basis(z, 10);
  REQUIRE(outcome.ok());
  const auto& basis = *outcome.basis;
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c;
    for (int n = 0; n <= 10; ++n) c.emplace_back(coeff(rng));
    PolyQ f = PolyQ::zero(RationalField{});
    for (size_t n = 0; n < c.size(); ++n)
      f += basis.polys[n].scaled(c[n]);
    auto expanded = expand_in_basis(f, basis, z);
    REQUIRE(expanded.ok);
    for (size_t n = 0; n < c.size(); ++n) {
      Rational got =
          n < expanded.coeffs.size() ? expanded.coeffs[n] : Rational(0);
      CHECK(got == c[n]);
    }
    CHECK(is_member(z, f).member);

    // Perturb one coefficient off the integers: both checks reject.
    size_t k = rng() % c.size();
    PolyQ g = f + basis.polys[k].scaled(Rational(BigInt(1), BigInt(2)));
    CHECK(!is_member(z, g).member);
    CHECK(!expand_in_basis(g, basis, z).ok);
  }
}

TEST_CASE("membership budget guard") {
  FpTDomain d(BigInt(2));
  RatFuncField f = d.field();
  // Clearing denominator T^23 forces 2^23 residues, over the budget.
  FpPoly t23 = pow(FpPoly::variable(BigInt(2)), BigInt(23));
  RatFunc c(FpPoly::constant(BigInt(2), 1), t23);
  PolyFpT bad(f, {f.zero(), c, c});
  CHECK_THROWS_AS(is_member(d, bad), budget_error);
}

TEST_CASE("expand rejects degrees beyond the basis") {
  ZDomain z;
  auto outcome = build_regular_basis(z, 3);
  REQUIRE(outcome.ok());
  CHECK_THROWS_AS(expand_in_basis(binomial_poly(5), *outcome.basis, z),
                  std::invalid_argument);
}

TEST_CASE("leading coefficients generate the characteristic ideal") {
  // sigma_n must generate the same ideal as the factored characteristic
  // ideal: their quotient is a unit of D.
  ZDomain z;
  QuadOrderDomain gauss(BigInt(-1));
  FpTDomain fpt(BigInt(2));
  for (long n = 0; n <= 12; ++n) {
    {
      auto gen = principal_generator(
          ideal_report(z.spec(), BigInt(n)).characteristic);
      Rational u = sigma(z, n) / std::get<Rational>(*gen);
      CHECK(u.is_integer());
      CHECK(u.inverse().is_integer());
    }
    {
      auto gen = principal_generator(
          ideal_report(gauss.spec(), BigInt(n)).characteristic);
      QuadElem u = sigma(gauss, n) / std::get<QuadElem>(*gen);
      CHECK(gauss.is_integral(u));
      CHECK(gauss.is_integral(u.inverse()));
    }
    {
      auto gen = principal_generator(
          ideal_report(fpt.spec(), BigInt(n)).characteristic);
      RatFunc u = sigma(fpt, n) / std::get<RatFunc>(*gen);
      CHECK(u.is_polynomial());
      CHECK(u.inverse().is_polynomial());
    }
  }
}
