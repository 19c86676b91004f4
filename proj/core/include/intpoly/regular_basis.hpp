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

#ifndef INTPOLY_REGULAR_BASIS_HPP
#define INTPOLY_REGULAR_BASIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "intpoly/fermat.hpp"

namespace intpoly {

/// Prime powers q with 2 <= q <= n, ascending.
inline std::vector<BigInt> prime_powers_up_to(long n) {
  std::vector<BigInt> out;
  for (long q = 2; q <= n; ++q)
    if (prime_power_decompose(BigInt(q))) out.push_back(BigInt(q));
  return out;
}

/// sigma_n = prod over prime powers q <= n of pi_q^(-w_q(n)); the canonical
/// generator of the n-th characteristic ideal when the domain has all Pi_q
/// principal up to n.
template <GroundDomain D>
typename D::Elem sigma(const D& dom, long n) {
  if (n < 0) throw std::invalid_argument("sigma: n >= 0");
  typename D::Elem denom = dom.field().one();
  for (const BigInt& q : prime_powers_up_to(n)) {
    auto pi = dom.pi_generator(q);
    if (!pi) throw polya_obstruction_error(q, dom.obstruction_info(q));
    BigInt w = factorial_exponent(q, BigInt(n));
    for (BigInt i(0); i < w; i += BigInt(1)) denom = denom * *pi;
  }
  return dom.field().one() / denom;
}

/// Pi_q is not principal: the first bad prime power and its ideal class.
struct PolyaObstruction {
  BigInt q;
  std::string info;
};

/// Regular basis G_0..G_N of Int(D) with deg G_n = n and leading
/// coefficient sigma_n, together with the Bezout data that produced it.
template <GroundDomain D>
struct RegularBasis {
  using P = typename FermatTower<D>::P;
  using Elem = typename D::Elem;

  DomainSpec domain;
  std::vector<P> polys;
  std::vector<Elem> sigmas;
  /// Per degree n, the chosen coefficients a_{q,n} as (q, a) pairs.
  std::vector<std::vector<std::pair<BigInt, Elem>>> bezout;

  int upto() const { return static_cast<int>(polys.size()) - 1; }
};

template <GroundDomain D>
struct BasisOutcome {
  std::optional<RegularBasis<D>> basis;
  std::optional<PolyaObstruction> obstruction;
  bool ok() const { return basis.has_value(); }
};

/// The construction: G_0 = 1, G_1 = X, and for n > 1
///   G_n = sum over prime powers q <= n of a_{q,n} * F_{q,n}
/// where the a_{q,n} in D solve sigma_n = sum a_{q,n} pi_q^(-w_q(n)).
/// Requires Pi_q principal for all prime powers q <= upto; otherwise the
/// outcome reports the first obstruction.
template <GroundDomain D>
BasisOutcome<D> build_regular_basis(const D& dom, int upto) {
  if (upto < 0) throw std::invalid_argument("build_regular_basis: upto >= 0");
  using Elem = typename D::Elem;
  using P = typename FermatTower<D>::P;

  // (C3) through the requested degree, reporting the first bad q.
  std::vector<BigInt> qs = prime_powers_up_to(upto);
  for (const BigInt& q : qs) {
    if (!dom.pi_generator(q))
      return {std::nullopt, PolyaObstruction{q, dom.obstruction_info(q)}};
  }

  RegularBasis<D> basis;
  basis.domain = dom.spec();
  auto field = dom.field();
  basis.polys.push_back(P::constant(field, field.one()));
  basis.sigmas.push_back(field.one());
  basis.bezout.emplace_back();
  if (upto >= 1) {
    basis.polys.push_back(P::variable(field));
    basis.sigmas.push_back(field.one());
    basis.bezout.emplace_back();
  }

  std::vector<FknTable<D>> tables;
  std::vector<Elem> pis;
  tables.reserve(qs.size());
  for (const BigInt& q : qs) {
    tables.emplace_back(dom, q, upto);
    pis.push_back(tables.back().tower().pi());
  }

  for (long n = 2; n <= upto; ++n) {
    // Denominator-cleared Bezout targets t_q = M / pi_q^(w_q(n)) where
    // M = prod pi^w; the family has unit gcd, one coprime term per prime.
    std::vector<BigInt> ws;
    Elem big_m = field.one();
    size_t active = 0;
    for (size_t i = 0; i < qs.size(); ++i) {
      if (qs[i] > BigInt(n)) break;
      BigInt w = factorial_exponent(qs[i], BigInt(n));
      ws.push_back(w);
      for (BigInt j(0); j < w; j += BigInt(1)) big_m = big_m * pis[i];
      ++active;
    }
    std::vector<Elem> targets;
    for (size_t i = 0; i < active; ++i) {
      Elem piw = field.one();
      for (BigInt j(0); j < ws[i]; j += BigInt(1)) piw = piw * pis[i];
      targets.push_back(big_m / piw);
    }
    std::vector<Elem> a = dom.bezout(targets);

    Elem sigma_n = field.one() / big_m;
    P g = P::zero(field);
    std::vector<std::pair<BigInt, Elem>> chosen;
    for (size_t i = 0; i < active; ++i) {
      chosen.emplace_back(qs[i], a[i]);
      if (a[i] == field.zero()) continue;
      g += tables[i].get(n).scaled(a[i]);
    }
    if (g.degree() != n || !(g.leading() == sigma_n))
      throw std::logic_error("build_regular_basis: G_n invariant violated");
    basis.polys.push_back(std::move(g));
    basis.sigmas.push_back(std::move(sigma_n));
    basis.bezout.push_back(std::move(chosen));
  }
  return {std::move(basis), std::nullopt};
}

/// Result of expanding f in a regular basis.  Failure of some coefficient
/// to lie in D is a non-membership witness for f, not an error.
template <GroundDomain D>
struct ExpandOutcome {
  bool ok = false;
  std::vector<typename D::Elem> coeffs;
  long failed_degree = -1;
  std::optional<typename D::Elem> failed_coefficient;
};

/// Descending leading-coefficient elimination: c_n = coeff_n(rest)/sigma_n,
/// asserted to lie in D at every step.
template <GroundDomain D>
ExpandOutcome<D> expand_in_basis(const typename RegularBasis<D>::P& f,
                                 const RegularBasis<D>& basis, const D& dom) {
  if (f.degree() > basis.upto())
    throw std::invalid_argument("expand_in_basis: degree exceeds basis");
  ExpandOutcome<D> out;
  auto field = dom.field();
  auto rest = f;
  out.coeffs.assign(static_cast<size_t>(f.degree() < 0 ? 0 : f.degree()) + 1,
                    field.zero());
  for (long n = f.degree(); n >= 0; --n) {
    auto c = rest.coeff(static_cast<int>(n)) /
             basis.sigmas[static_cast<size_t>(n)];
    if (c == field.zero()) continue;
    if (!dom.is_integral(c)) {
      out.failed_degree = n;
      out.failed_coefficient = c;
      return out;
    }
    out.coeffs[static_cast<size_t>(n)] = c;
    rest -= basis.polys[static_cast<size_t>(n)].scaled(c);
  }
  if (!rest.is_zero())
    throw std::logic_error("expand_in_basis: nonzero remainder");
  out.ok = true;
  return out;
}

}  // namespace intpoly

#endif  // INTPOLY_REGULAR_BASIS_HPP
