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

#ifndef INTPOLY_POLY_HPP
#define INTPOLY_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "intpoly/kronecker_mul.hpp"
#include "intpoly/quad_elem.hpp"
#include "intpoly/rat_func.hpp"
#include "intpoly/rational.hpp"

namespace intpoly {

/// Field context for the rationals; carries no state.
struct RationalField {
  using Elem = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Dense univariate polynomial in X with coefficients in the field described
/// by F (one of RationalField, QuadField, RatFuncField).  Coefficient index =
/// degree, no trailing zeros; the zero polynomial has degree -1.  Values are
/// immutable after construction and safe to share across threads.
template <class F>
class Poly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  Poly(F field, std::vector<Elem> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    // Coefficient field homogeneity: comparing against zero throws on a
    // coefficient from a different field (wrong d or p).
    for (const auto& c : coeffs_) (void)(c == field_.zero());
    trim();
  }
  static Poly zero(F field) { return Poly(std::move(field), {}); }
  static Poly constant(F field, Elem c) {
    return Poly(std::move(field), {std::move(c)});
  }
  static Poly variable(F field) {
    std::vector<Elem> c{field.zero(), field.one()};
    return Poly(std::move(field), std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Elem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<size_t>(i)];
  }
  const Elem& leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading of zero");
    return coeffs_.back();
  }

  Poly& operator+=(const Poly& o) {
    check_same_field(o);
    if (coeffs_.size() < o.coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same_field(o);
    if (coeffs_.size() < o.coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<Elem> c;
    c.reserve(a.coeffs_.size());
    for (const auto& v : a.coeffs_) c.push_back(-v);
    return Poly(a.field_, std::move(c));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    if (a.is_zero() || b.is_zero()) return zero(a.field_);
    if constexpr (std::is_same_v<F, RationalField>) {
      return Poly(a.field_,
                  detail::mul_rational_dense(a.coeffs_, b.coeffs_));
    } else {
      std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                          a.field_.zero());
      for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == a.field_.zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
          c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
      return Poly(a.field_, std::move(c));
    }
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    a.check_same_field(b);
    return a.coeffs_ == b.coeffs_;
  }

  /// Scalar multiple c*f.
  Poly scaled(const Elem& c) const {
    if (c == field_.zero()) return zero(field_);
    std::vector<Elem> out;
    out.reserve(coeffs_.size());
    for (const auto& v : coeffs_) out.push_back(v * c);
    return Poly(field_, std::move(out));
  }

  /// Horner evaluation at a point of the coefficient field.
  Elem eval(const Elem& a) const {
    Elem acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * a + *it;
    return acc;
  }

 private:
  void check_same_field(const Poly& o) const {
    if (!(field_ == o.field_))
      throw std::invalid_argument("Poly: mixed coefficient fields");
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == field_.zero())
      coeffs_.pop_back();
  }

  F field_;
  std::vector<Elem> coeffs_;
};

using PolyQ = Poly<RationalField>;
using PolyQuad = Poly<QuadField>;
using PolyFpT = Poly<RatFuncField>;

/// f(g(X)) by Horner in g; deg = deg f * deg g when both are nonconstant.
template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
  if (!(f.field() == g.field()))
    throw std::invalid_argument("compose: mixed coefficient fields");
  Poly<F> acc = Poly<F>::zero(f.field());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * g;
    acc += Poly<F>::constant(f.field(), f.coeff(i));
  }
  return acc;
}

template <class F>
Poly<F> pow(const Poly<F>& f, const BigInt& e) {
  if (e.sign() < 0) throw std::domain_error("Poly pow: negative exponent");
  Poly<F> base = f;
  Poly<F> acc = Poly<F>::constant(f.field(), f.field().one());
  BigInt k = e;
  while (!k.is_zero()) {
    if (k.is_odd()) acc = acc * base;
    k = k / BigInt(2);
    if (!k.is_zero()) base = base * base;
  }
  return acc;
}

/// Coefficients c_k with f = sum c_k * binom(X, k), computed by forward
/// differences c_k = Delta^k f(0).  The transform is the membership oracle
/// for Z and its localizations.
std::vector<Rational> binomial_basis(const PolyQ& f);

/// binom(X, n) as an exact rational polynomial.
PolyQ binomial_poly(int n);

/// sum c_k * binom(X, k) expanded back into the monomial basis.
PolyQ from_binomial_basis(const std::vector<Rational>& c);

}  // namespace intpoly

#endif  // INTPOLY_POLY_HPP
