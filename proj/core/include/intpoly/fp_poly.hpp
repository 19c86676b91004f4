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

#ifndef INTPOLY_FP_POLY_HPP
#define INTPOLY_FP_POLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "intpoly/bigint.hpp"

namespace intpoly {

/// Dense polynomial in T over the prime field F_p.  Coefficients are
/// residues in [0, p), index = degree, no trailing zeros.  deg 0 = -1.
class FpPoly {
 public:
  FpPoly(BigInt p, std::vector<BigInt> coeffs);
  static FpPoly zero(const BigInt& p) { return FpPoly(p, {}); }
  static FpPoly constant(const BigInt& p, const BigInt& c);
  static FpPoly variable(const BigInt& p);  // T

  const BigInt& p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
  bool is_constant() const { return degree() <= 0; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  const BigInt& leading() const;
  BigInt coeff(int i) const;

  FpPoly monic() const;
  /// Norm p^deg of the residue ring F_p[T]/(this); this must be nonzero.
  BigInt norm() const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a);

  friend bool operator==(const FpPoly& a, const FpPoly& b);
  /// Degree-then-lexicographic order; total on each F_p[T].
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b);

  BigInt eval(const BigInt& t) const;

  /// "T^2+T+1" style display, coefficients shown only when != 1.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FpPoly& v);

 private:
  void reduce_and_trim();
  void check_same_field(const FpPoly& o) const;

  BigInt p_;
  std::vector<BigInt> coeffs_;
};

struct FpDivMod {
  FpPoly quot, rem;
};
FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly mod(const FpPoly& a, const FpPoly& b);
bool divides(const FpPoly& d, const FpPoly& a);
FpPoly divexact(const FpPoly& a, const FpPoly& b);

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);

struct FpXgcdResult {
  FpPoly g, x, y;  // g monic, a*x + b*y = g
};
FpXgcdResult xgcd(const FpPoly& a, const FpPoly& b);

FpPoly pow(const FpPoly& a, const BigInt& e);

bool is_irreducible(const FpPoly& f);

/// All monic irreducibles of degree exactly e, ordered by coefficient
/// counting order (constant digit first).
std::vector<FpPoly> monic_irreducibles(const BigInt& p, int e);

/// All monic polynomials of degree exactly e in counting order.
std::vector<FpPoly> monic_polys(const BigInt& p, int e);

/// Product of all monic irreducibles of degree e via the Moebius formula
/// prod_{e'|e} (T^{p^{e'}} - T)^{mu(e/e')}.
FpPoly irreducible_product_moebius(const BigInt& p, int e);

}  // namespace intpoly

#endif  // INTPOLY_FP_POLY_HPP
