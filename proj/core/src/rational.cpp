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

#include "intpoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace intpoly {

Rational::Rational(const BigInt& num, const BigInt& den) : Rational() {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(std::string_view text) : Rational() {
  std::string s(text);
  if (mpq_set_str(q_, s.c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(q_)) == 0) {
    throw std::invalid_argument("Rational: cannot parse: " + s);
  }
  mpq_canonicalize(q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

std::string Rational::str() const {
  std::string s = num().str();
  if (!is_integer()) s += "/" + den().str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.str();
}

int valuation(const Rational& r, const BigInt& p) {
  if (r.is_zero()) throw std::domain_error("valuation: zero");
  return valuation(r.num(), p) - valuation(r.den(), p);
}

}  // namespace intpoly
