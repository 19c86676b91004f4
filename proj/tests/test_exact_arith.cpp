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

#include "intpoly/kronecker_mul.hpp"
#include "intpoly/poly.hpp"

using namespace intpoly;

namespace {

PolyQ pq(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.emplace_back(s);
  return PolyQ(RationalField{}, std::move(c));
}

std::mt19937_64 rng(0x5eed);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

PolyQ random_poly(int maxdeg) {
  std::uniform_int_distribution<int> d(0, maxdeg);
  int n = d(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) c.push_back(random_rational());
  return PolyQ(RationalField{}, std::move(c));
}

}  // namespace

TEST_CASE("bigint basics") {
  BigInt a("123456789012345678901234567890");
  BigInt b("987654321987654321");
  CHECK(a == (a / b) * b + a % b);
  CHECK(BigInt("111111111") * BigInt("111111111") ==
        BigInt("12345678987654321"));
  CHECK(gcd(BigInt(12), BigInt(18)) == BigInt(6));
  auto r = xgcd(BigInt(240), BigInt(46));
  CHECK(r.g == BigInt(2));
  CHECK(BigInt(240) * r.x + BigInt(46) * r.y == r.g);
  CHECK(valuation(BigInt(48), BigInt(2)) == 4);
  CHECK(is_prime(BigInt(7919)));
  CHECK(!is_prime(BigInt(7921)));  // 89^2
  CHECK(prime_power_decompose(BigInt(8))->first == BigInt(2));
  CHECK(prime_power_decompose(BigInt(8))->second == 3);
  CHECK(!prime_power_decompose(BigInt(12)));
  CHECK(*perfect_sqrt(BigInt(144)) == BigInt(12));
  CHECK(!perfect_sqrt(BigInt(145)));
}

TEST_CASE("tonelli-shanks square roots") {
  for (long p : {3, 5, 7, 13, 41, 97, 193}) {
    BigInt bp(p);
    for (long a = 0; a < p; ++a) {
      auto s = sqrt_mod(BigInt(a), bp);
      bool is_square = false;
      for (long x = 0; x < p && !is_square; ++x) is_square = (x * x) % p == a;
      CHECK(s.has_value() == is_square);
      if (s) CHECK(fdiv_r(*s * *s, bp) == fdiv_r(BigInt(a), bp));
    }
  }
}

TEST_CASE("rational canonical form") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(2));
  CHECK(r.str() == "-3/2");
  CHECK(Rational("7/-14") == Rational(BigInt(-1), BigInt(2)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("quad element arithmetic") {
  QuadField f{BigInt(-5)};
  QuadElem a(Rational(1), Rational(1), BigInt(-5));  // 1 + sqrt(-5)
  CHECK(a.norm() == Rational(6));
  CHECK(a * a.conjugate() == f.from_rational(Rational(6)));
  CHECK(a * a.inverse() == f.one());
  QuadElem other_d(Rational(1), Rational(0), BigInt(-1));
  CHECK_THROWS_AS((void)(a + other_d), std::invalid_argument);
}

TEST_CASE("poly ring identities") {
  auto x_plus_1 = pq({"1", "1"});
  auto x_minus_1 = pq({"-1", "1"});
  CHECK(x_plus_1 * x_minus_1 == pq({"-1", "0", "1"}));  // X^2 - 1
  auto f = random_poly(5);
  CHECK(PolyQ::zero(RationalField{}) + f == f);
}

TEST_CASE("characteristic-2 Frobenius over F_2(T)") {
  RatFuncField f{BigInt(2)};
  RatFunc t(FpPoly::variable(BigInt(2)));
  PolyFpT g(f, {t, f.one()});  // X + T
  PolyFpT sq = g * g;
  PolyFpT expect(f, {t * t, f.zero(), f.one()});  // X^2 + T^2
  CHECK(sq == expect);
}

TEST_CASE("compose") {
  RationalField f;
  auto sq = pq({"0", "0", "1"});
  auto xp1 = pq({"1", "1"});
  CHECK(compose(sq, xp1) == pq({"1", "2", "1"}));
  auto g = random_poly(4);
  CHECK(compose(g, PolyQ::variable(f)) == g);  // f^(0) convention: f . X = f

  // F_2 . F_2 expanded by hand: (X^4 - 2X^3 - X^2 + 2X)/8.
  auto fermat2 = pq({"0", "-1/2", "1/2"});
  auto composed = compose(fermat2, fermat2);
  CHECK(composed == pq({"0", "2/8", "-1/8", "-2/8", "1/8"}));
  // Independent route: agreement with evaluation at many points.
  for (long a = -6; a <= 6; ++a) {
    CHECK(composed.eval(Rational(a)) ==
          fermat2.eval(fermat2.eval(Rational(a))));
  }
}

TEST_CASE("eval") {
  auto fermat2 = pq({"0", "-1/2", "1/2"});
  CHECK(fermat2.eval(Rational(5)) == Rational(10));  // binom(5,2)
  auto f = random_poly(5);
  CHECK(f.eval(Rational(0)) == f.coeff(0));

  // (X^3 - X)/3 at 1 + sqrt(-5) equals -5 - sqrt(-5), by direct expansion.
  QuadField qf{BigInt(-5)};
  Rational third(BigInt(1), BigInt(3));
  PolyQuad g(qf, {qf.zero(),
                  QuadElem(-third, Rational(0), BigInt(-5)),
                  qf.zero(),
                  QuadElem(third, Rational(0), BigInt(-5))});
  QuadElem a(Rational(1), Rational(1), BigInt(-5));
  CHECK(g.eval(a) == QuadElem(Rational(-5), Rational(-1), BigInt(-5)));
}

TEST_CASE("binomial basis transform") {
  // X^2 = binom(X,1) + 2*binom(X,2): both sides agree at 0, 1, 2.
  auto xsq = pq({"0", "0", "1"});
  auto c = binomial_basis(xsq);
  CHECK(c == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
  for (long a = 0; a <= 2; ++a)
    CHECK(xsq.eval(Rational(a)) == from_binomial_basis(c).eval(Rational(a)));

  CHECK(binomial_basis(binomial_poly(3)) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0),
                              Rational(1)});
  CHECK(binomial_poly(3) == pq({"0", "2/6", "-3/6", "1/6"}));
  CHECK(binomial_basis(pq({"7"})) == std::vector<Rational>{Rational(7)});
}

TEST_CASE("binomial basis inverts expansion bit-exactly") {
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(8);
    CHECK(from_binomial_basis(binomial_basis(f)) == f);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(5), b = random_poly(5), c = random_poly(5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("compose-eval compatibility") {
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(4), g = random_poly(4);
    Rational a = random_rational();
    CHECK(compose(f, g).eval(a) == f.eval(g.eval(a)));
  }
}

TEST_CASE("kronecker convolution matches schoolbook") {
  std::uniform_int_distribution<int> bits(1, 120), sign(0, 1);
  auto random_big = [&]() {
    BigInt x(1);
    int b = bits(rng);
    for (int i = 0; i < b; ++i) x *= BigInt(2);
    x += BigInt(static_cast<long>(rng() % 1000));
    return sign(rng) ? x : -x;
  };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<BigInt> a, b;
    for (int i = 0; i < 40; ++i) a.push_back(random_big());
    for (int i = 0; i < 37; ++i) b.push_back(random_big());
    auto fast = detail::convolve(a, b);
    std::vector<BigInt> slow(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) slow[i + j] += a[i] * b[j];
    CHECK(fast == slow);
  }
}

TEST_CASE("fp poly arithmetic") {
  BigInt p(5);
  FpPoly f(p, {BigInt(1), BigInt(2), BigInt(1)});  // x^2 + 2x + 1
  FpPoly g(p, {BigInt(1), BigInt(1)});             // x + 1
  CHECK(divexact(f, g) == g);
  CHECK(gcd(f, g) == g);
  // X^2 + 1 and X + 1 are coprime mod 5 ((-1)^2 + 1 = 2 != 0).
  FpPoly a(p, {BigInt(1), BigInt(0), BigInt(1)});
  FpPoly b(p, {BigInt(1), BigInt(1)});
  auto r = xgcd(a, b);
  CHECK(r.g.is_one());
  CHECK(a * r.x + b * r.y == r.g);
  CHECK(is_irreducible(FpPoly(BigInt(2), {BigInt(1), BigInt(1), BigInt(1)})));
  CHECK(!is_irreducible(FpPoly(BigInt(2), {BigInt(1), BigInt(0), BigInt(1)})));
}

TEST_CASE("rat func normalization") {
  BigInt p(3);
  FpPoly t = FpPoly::variable(p);
  RatFunc f(t * t + t, t);  // (T^2 + T)/T = T + 1
  CHECK(f.is_polynomial());
  CHECK(f.num() == t + FpPoly::constant(p, 1));
  RatFunc g(FpPoly::constant(p, 2), t);  // 2/T -> monic denominator form
  CHECK(g.den().is_monic());
  CHECK(g * g.inverse() == RatFunc::one(p));
}
