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

#ifndef INTPOLY_QUAD_ELEM_HPP
#define INTPOLY_QUAD_ELEM_HPP

#include <iosfwd>
#include <string>

#include "intpoly/rational.hpp"

namespace intpoly {

/// Element x + y*sqrt(d) of the imaginary quadratic field Q(sqrt(d)),
/// d < 0 squarefree.  d is fixed per computation context; combining
/// elements with different d throws rather than coercing.
class QuadElem {
 public:
  QuadElem(Rational x, Rational y, BigInt d);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_one() const { return x_.is_one() && y_.is_zero(); }
  bool is_rational() const { return y_.is_zero(); }

  /// Field norm x^2 - d*y^2 (positive for nonzero elements since d < 0).
  Rational norm() const;
  QuadElem conjugate() const;
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend QuadElem operator-(const QuadElem& a) {
    return QuadElem(-a.x_, -a.y_, a.d_);
  }

  friend bool operator==(const QuadElem& a, const QuadElem& b);

  /// "x", "y*sqrt(d)", or "x+y*sqrt(d)".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadElem& v);

 private:
  void check_same_field(const QuadElem& o) const;

  Rational x_, y_;
  BigInt d_;
};

/// Field context for Q(sqrt(d)).
struct QuadField {
  BigInt d;

  using Elem = QuadElem;
  QuadElem zero() const { return QuadElem(Rational(0), Rational(0), d); }
  QuadElem one() const { return QuadElem(Rational(1), Rational(0), d); }
  QuadElem from_rational(const Rational& r) const {
    return QuadElem(r, Rational(0), d);
  }
  friend bool operator==(const QuadField&, const QuadField&) = default;
};

}  // namespace intpoly

#endif  // INTPOLY_QUAD_ELEM_HPP
