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

#include "intpoly/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace intpoly {

BigInt::BigInt(std::string_view decimal) {
  std::string s(decimal);
  if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw std::invalid_argument("BigInt: not a decimal integer: " + s);
  }
}

long BigInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("BigInt::to_long: out of range");
  return mpz_get_si(z_);
}

std::string BigInt::str() const {
  std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
  mpz_get_str(s.data(), 10, z_);
  s.resize(s.find('\0'));
  return s;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt r;
  mpz_tdiv_q(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt r;
  mpz_tdiv_r(r.z_, a.z_, b.z_);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.str();
}

BigInt abs(const BigInt& a) {
  BigInt r;
  mpz_abs(r.raw(), a.raw());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.raw(), a.raw(), b.raw());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.raw(), a.raw(), b.raw());
  return r;
}

XgcdResult xgcd(const BigInt& a, const BigInt& b) {
  XgcdResult r;
  mpz_gcdext(r.g.raw(), r.x.raw(), r.y.raw(), a.raw(), b.raw());
  return r;
}

BigInt pow(const BigInt& a, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.raw(), a.raw(), e);
  return r;
}

BigInt pow(const BigInt& a, const BigInt& e) {
  if (e.sign() < 0) throw std::domain_error("BigInt pow: negative exponent");
  if (!e.fits_long()) throw std::overflow_error("BigInt pow: huge exponent");
  return pow(a, static_cast<unsigned long>(e.to_long()));
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  if (b.is_zero() || !divides(b, a))
    throw std::domain_error("BigInt divexact: not divisible");
  BigInt r;
  mpz_divexact(r.raw(), a.raw(), b.raw());
  return r;
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.raw(), d.raw()) != 0;
}

BigInt fdiv_q(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt r;
  mpz_fdiv_q(r.raw(), a.raw(), b.raw());
  return r;
}

BigInt fdiv_r(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt r;
  mpz_fdiv_r(r.raw(), a.raw(), b.raw());
  return r;
}

BigInt isqrt(const BigInt& a) {
  if (a.sign() < 0) throw std::domain_error("BigInt isqrt: negative");
  BigInt r;
  mpz_sqrt(r.raw(), a.raw());
  return r;
}

std::optional<BigInt> perfect_sqrt(const BigInt& a) {
  if (a.sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(a.raw()) == 0) return std::nullopt;
  return isqrt(a);
}

bool is_prime(const BigInt& n) {
  if (n < BigInt(2)) return false;
  if (n == BigInt(2) || n == BigInt(3)) return true;
  if (n.is_even()) return false;
  BigInt d(3);
  while (d * d <= n) {
    if (divides(d, n)) return false;
    d += BigInt(2);
  }
  return true;
}

std::vector<std::pair<BigInt, int>> factor(const BigInt& n) {
  if (n.is_zero()) throw std::domain_error("factor: zero");
  std::vector<std::pair<BigInt, int>> out;
  BigInt m = abs(n);
  auto strip = [&](const BigInt& p) {
    int e = 0;
    while (divides(p, m)) {
      m = divexact(m, p);
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(BigInt(2));
  BigInt d(3);
  while (d * d <= m) {
    strip(d);
    d += BigInt(2);
  }
  if (m > BigInt(1)) out.emplace_back(m, 1);
  return out;
}

bool is_squarefree(const BigInt& n) {
  if (n.is_zero()) return false;
  for (const auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

std::optional<std::pair<BigInt, int>> prime_power_decompose(const BigInt& n) {
  if (n < BigInt(2)) return std::nullopt;
  auto f = factor(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].first, f[0].second);
}

int kronecker(const BigInt& a, const BigInt& n) {
  return mpz_kronecker(a.raw(), n.raw());
}

std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p) {
  // Tonelli-Shanks; p an odd prime.
  if (p <= BigInt(2) || !is_prime(p))
    throw std::domain_error("sqrt_mod: p must be an odd prime");
  BigInt r = fdiv_r(a, p);
  if (r.is_zero()) return BigInt(0);
  if (kronecker(r, p) != 1) return std::nullopt;

  auto pow_mod = [&](const BigInt& base, const BigInt& e) {
    BigInt out;
    mpz_powm(out.raw(), base.raw(), e.raw(), p.raw());
    return out;
  };

  // p - 1 = q * 2^s with q odd.
  BigInt q = p - BigInt(1);
  unsigned long s = 0;
  while (q.is_even()) {
    q = divexact(q, BigInt(2));
    ++s;
  }
  if (s == 1) {
    return pow_mod(r, divexact(p + BigInt(1), BigInt(4)));
  }
  // Find a quadratic nonresidue z.
  BigInt z(2);
  while (kronecker(z, p) != -1) z += BigInt(1);

  BigInt m(static_cast<long>(s));
  BigInt c = pow_mod(z, q);
  BigInt t = pow_mod(r, q);
  BigInt x = pow_mod(r, divexact(q + BigInt(1), BigInt(2)));
  while (!t.is_one()) {
    BigInt tt = t;
    long i = 0;
    while (!tt.is_one()) {
      tt = fdiv_r(tt * tt, p);
      ++i;
      if (BigInt(i) == m) return std::nullopt;  // unreachable for prime p
    }
    BigInt e = m - BigInt(i) - BigInt(1);
    BigInt b = c;
    for (BigInt j(0); j < e; j += BigInt(1)) b = fdiv_r(b * b, p);
    m = BigInt(i);
    c = fdiv_r(b * b, p);
    t = fdiv_r(t * c, p);
    x = fdiv_r(x * b, p);
  }
  return x;
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n.is_zero() || p <= BigInt(1))
    throw std::domain_error("valuation: need n != 0 and p > 1");
  int e = 0;
  BigInt m = n;
  while (divides(p, m)) {
    m = divexact(m, p);
    ++e;
  }
  return e;
}

}  // namespace intpoly
