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

#ifndef INTPOLY_RATIONAL_HPP
#define INTPOLY_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "intpoly/bigint.hpp"

namespace intpoly {

/// Exact rational number, always in lowest terms with positive denominator.
/// The unique-representation invariant makes operator== a plain comparison.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) : Rational() { mpq_set_si(q_, v, 1); }  // NOLINT
  Rational(int v) : Rational(static_cast<long>(v)) {}
  Rational(const BigInt& v) : Rational() {  // NOLINT: ZZ embeds in QQ
    mpq_set_z(q_, v.raw());
  }
  Rational(const BigInt& num, const BigInt& den);
  /// Parses "n" or "n/d".
  explicit Rational(std::string_view text);

  Rational(const Rational& o) : Rational() { mpq_set(q_, o.q_); }
  Rational(Rational&& o) noexcept : Rational() { mpq_swap(q_, o.q_); }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  BigInt num() const {
    BigInt n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  BigInt den() const {
    BigInt d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  /// "n" when integral, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

  Rational inverse() const;

 private:
  mpq_t q_;
};

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& r, const BigInt& p);

}  // namespace intpoly

#endif  // INTPOLY_RATIONAL_HPP
