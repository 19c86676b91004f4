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

#ifndef INTPOLY_RAT_FUNC_HPP
#define INTPOLY_RAT_FUNC_HPP

#include <iosfwd>
#include <string>

#include "intpoly/fp_poly.hpp"

namespace intpoly {

/// Element of the rational function field F_p(T): num/den with den monic
/// and gcd(num, den) = 1.  Unique representation per value.
class RatFunc {
 public:
  RatFunc(FpPoly num, FpPoly den);
  explicit RatFunc(FpPoly num);
  static RatFunc zero(const BigInt& p) {
    return RatFunc(FpPoly::zero(p));
  }
  static RatFunc one(const BigInt& p) {
    return RatFunc(FpPoly::constant(p, 1));
  }

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  const BigInt& p() const { return num_.p(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& v);

 private:
  void normalize();

  FpPoly num_, den_;
};

/// Field context for F_p(T).
struct RatFuncField {
  BigInt p;

  using Elem = RatFunc;
  RatFunc zero() const { return RatFunc::zero(p); }
  RatFunc one() const { return RatFunc::one(p); }
  friend bool operator==(const RatFuncField&, const RatFuncField&) = default;
};

}  // namespace intpoly

#endif  // INTPOLY_RAT_FUNC_HPP
