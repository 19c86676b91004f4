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

#ifndef INTPOLY_DOMAIN_HPP
#define INTPOLY_DOMAIN_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intpoly/poly.hpp"
#include "intpoly/quad_ideal.hpp"

namespace intpoly {

/// The four concrete ground domains D.
enum class DomainKind {
  kIntegers,            // Z
  kLocalizedIntegers,   // Z localized at a prime p
  kFiniteFieldPolyRing, // F_p[T]
  kImagQuadraticOrder,  // maximal order of Q(sqrt(d)), d < 0 squarefree
};

/// Runtime descriptor of a ground domain; serialized as "Z", "Zloc:p",
/// "FpT:p", or "Quad:d".
struct DomainSpec {
  DomainKind kind = DomainKind::kIntegers;
  BigInt param;  // p or d; unused for Z

  static DomainSpec integers() { return {DomainKind::kIntegers, BigInt(0)}; }
  static DomainSpec localized_integers(const BigInt& p);
  static DomainSpec finite_field_poly(const BigInt& p);
  static DomainSpec imag_quadratic_order(const BigInt& d);

  static DomainSpec parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// A t-maximal ideal of finite norm in one of the supported domains.
struct PrimeDesc {
  DomainSpec domain;
  std::variant<BigInt, FpPoly, QuadIdeal> data;
  BigInt norm;

  std::string str() const;
  friend bool operator==(const PrimeDesc&, const PrimeDesc&) = default;
  friend std::strong_ordering operator<=>(const PrimeDesc& a,
                                          const PrimeDesc& b);
};

/// Formal product of distinct primes with nonzero integer exponents; the
/// empty product is the unit ideal D.  Houses Pi_n, the characteristic
/// ideals, and the factorial ideals in factored form.
struct FactoredIdeal {
  DomainSpec domain;
  std::vector<std::pair<PrimeDesc, BigInt>> factors;

  bool is_unit() const { return factors.empty(); }
  /// Sorts by prime, merges duplicates, drops zero exponents.
  void normalize();
  std::string str() const;

  friend bool operator==(const FactoredIdeal&, const FactoredIdeal&) = default;
};

/// Complete list of t-maximal ideals of norm <= bound, ordered by
/// (norm, data).
std::vector<PrimeDesc> primes_of_norm_at_most(const DomainSpec& domain,
                                              const BigInt& bound);

/// Pi_n: product of all t-maximal ideals of norm exactly n (unit ideal when
/// there are none, in particular for non-prime-powers).  Requires n >= 2.
FactoredIdeal pi_ideal(const DomainSpec& domain, const BigInt& n);

/// Field element of whichever fraction field the domain lives in.
using DomainElem = std::variant<Rational, RatFunc, QuadElem>;

std::string domain_elem_str(const DomainElem& e);

/// A generator when the (fractional) product ideal is principal; absence is
/// a value, not an error.  Over Z, Z_(p), and F_p[T] a canonical generator
/// always exists (positive resp. monic).
std::optional<DomainElem> principal_generator(const FactoredIdeal& ideal);

// ---------------------------------------------------------------------------
// Concrete domain classes.  These carry the compile-time coefficient field
// and the handful of operations the integer-valued polynomial machinery
// needs: integrality, Pi_q generators, and the Bezout step.
// ---------------------------------------------------------------------------

class ZDomain {
 public:
  using Field = RationalField;
  using Elem = Rational;

  Field field() const { return {}; }
  DomainSpec spec() const { return DomainSpec::integers(); }
  bool is_integral(const Elem& e) const { return e.is_integer(); }
  std::optional<Elem> pi_generator(const BigInt& q) const;
  std::string obstruction_info(const BigInt& q) const;
  std::vector<Elem> bezout(const std::vector<Elem>& t) const;
};

class ZLocalDomain {
 public:
  explicit ZLocalDomain(BigInt p);

  using Field = RationalField;
  using Elem = Rational;

  Field field() const { return {}; }
  DomainSpec spec() const { return DomainSpec::localized_integers(p_); }
  const BigInt& p() const { return p_; }
  bool is_integral(const Elem& e) const { return !divides(p_, e.den()); }
  std::optional<Elem> pi_generator(const BigInt& q) const;
  std::string obstruction_info(const BigInt& q) const;
  std::vector<Elem> bezout(const std::vector<Elem>& t) const;

 private:
  BigInt p_;
};

class FpTDomain {
 public:
  explicit FpTDomain(BigInt p);

  using Field = RatFuncField;
  using Elem = RatFunc;

  Field field() const { return {p_}; }
  DomainSpec spec() const { return DomainSpec::finite_field_poly(p_); }
  const BigInt& p() const { return p_; }
  bool is_integral(const Elem& e) const { return e.is_polynomial(); }
  std::optional<Elem> pi_generator(const BigInt& q) const;
  std::string obstruction_info(const BigInt& q) const;
  std::vector<Elem> bezout(const std::vector<Elem>& t) const;

 private:
  BigInt p_;
};

class QuadOrderDomain {
 public:
  explicit QuadOrderDomain(BigInt d);

  using Field = QuadField;
  using Elem = QuadElem;

  Field field() const { return {d_}; }
  DomainSpec spec() const { return DomainSpec::imag_quadratic_order(d_); }
  const BigInt& d() const { return d_; }
  const BigInt& disc() const { return disc_; }
  const ClassGroupTable& class_table() const { return *table_; }

  bool is_integral(const Elem& e) const;
  /// Integer coordinates (u, v) with e = u + v*omega, when integral.
  std::optional<std::pair<BigInt, BigInt>> to_coords(const Elem& e) const;
  Elem from_coords(const BigInt& u, const BigInt& v) const;

  std::optional<Elem> pi_generator(const BigInt& q) const;
  std::string obstruction_info(const BigInt& q) const;
  std::vector<Elem> bezout(const std::vector<Elem>& t) const;

 private:
  BigInt d_, disc_;
  std::shared_ptr<const ClassGroupTable> table_;
};

/// Ground domains expose the fraction-field context plus integrality,
/// Pi_q generators, and a Bezout solver.
template <class D>
concept GroundDomain = requires(const D dom, const typename D::Elem e,
                                const BigInt& q,
                                const std::vector<typename D::Elem>& t) {
  typename D::Field;
  typename D::Elem;
  { dom.field() } -> std::same_as<typename D::Field>;
  { dom.spec() } -> std::same_as<DomainSpec>;
  { dom.is_integral(e) } -> std::same_as<bool>;
  { dom.pi_generator(q) } -> std::same_as<std::optional<typename D::Elem>>;
  { dom.obstruction_info(q) } -> std::same_as<std::string>;
  { dom.bezout(t) } -> std::same_as<std::vector<typename D::Elem>>;
};

/// Calls fn with the concrete domain class selected by spec.
template <class Fn>
decltype(auto) with_domain(const DomainSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case DomainKind::kIntegers:
      return fn(ZDomain{});
    case DomainKind::kLocalizedIntegers:
      return fn(ZLocalDomain{spec.param});
    case DomainKind::kFiniteFieldPolyRing:
      return fn(FpTDomain{spec.param});
    case DomainKind::kImagQuadraticOrder:
      return fn(QuadOrderDomain{spec.param});
  }
  throw std::logic_error("with_domain: bad kind");
}

}  // namespace intpoly

#endif  // INTPOLY_DOMAIN_HPP
