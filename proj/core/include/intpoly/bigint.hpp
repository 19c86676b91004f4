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

#ifndef INTPOLY_BIGINT_HPP
#define INTPOLY_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intpoly {

/// Arbitrary-precision signed integer.  Thin value-semantic wrapper around
/// GMP's mpz_t; every operation is exact and there are no overflow semantics
/// anywhere in the library.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  BigInt(int v) : BigInt(static_cast<long>(v)) {}
  explicit BigInt(std::string_view decimal);

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
  bool is_unit() const { return mpz_cmpabs_ui(z_, 1) == 0; }
  bool is_even() const { return mpz_even_p(z_) != 0; }
  bool is_odd() const { return mpz_odd_p(z_) != 0; }

  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const;
  std::string str() const;

  size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) {
    BigInt r;
    mpz_neg(r.z_, a.z_);
    return r;
  }

  /// Truncated division (C semantics); b must be nonzero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = mpz_cmp(a.z_, b.z_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }
  friend bool operator==(const BigInt& a, long b) {
    return mpz_cmp_si(a.z_, b) == 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  mpz_t z_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// g = gcd(a, b) together with x, y such that a*x + b*y = g (g >= 0).
struct XgcdResult {
  BigInt g, x, y;
};
XgcdResult xgcd(const BigInt& a, const BigInt& b);

/// a^e for e >= 0.
BigInt pow(const BigInt& a, const BigInt& e);
BigInt pow(const BigInt& a, unsigned long e);

/// Quotient of an exact division; aborts if b does not divide a.
BigInt divexact(const BigInt& a, const BigInt& b);
bool divides(const BigInt& d, const BigInt& a);

/// Floor division and the matching nonnegative remainder (b > 0).
BigInt fdiv_q(const BigInt& a, const BigInt& b);
BigInt fdiv_r(const BigInt& a, const BigInt& b);

/// Largest s with s*s <= a (a >= 0).
BigInt isqrt(const BigInt& a);
std::optional<BigInt> perfect_sqrt(const BigInt& a);

/// Deterministic primality by trial division; intended for desk-scale inputs.
bool is_prime(const BigInt& n);

/// Trial-division factorization into (prime, exponent) pairs, n != 0.
std::vector<std::pair<BigInt, int>> factor(const BigInt& n);

bool is_squarefree(const BigInt& n);

/// If n = p^e for a prime p and e >= 1, returns (p, e).
std::optional<std::pair<BigInt, int>> prime_power_decompose(const BigInt& n);

/// Kronecker symbol (a|n).
int kronecker(const BigInt& a, const BigInt& n);

/// Square root of a modulo an odd prime p, if one exists.
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p);

/// Largest e >= 0 with p^e dividing n; n must be nonzero, p > 1.
int valuation(const BigInt& n, const BigInt& p);

}  // namespace intpoly

#endif  // INTPOLY_BIGINT_HPP
