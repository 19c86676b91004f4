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

#include "intpoly/membership.hpp"

namespace intpoly {

namespace {

// Over Z and Z_(p) the binomial polynomials are a regular basis, so f is
// integer-valued iff every binomial coefficient passes `good`.  If c_0..
// c_{k-1} pass and c_k fails then f(k) itself is not in D: witness k.
template <class Good>
MembershipResult binomial_membership(const PolyQ& f, Good good) {
  MembershipResult out;
  std::vector<Rational> c = binomial_basis(f);
  for (size_t k = 0; k < c.size(); ++k) {
    if (!good(c[k])) {
      out.member = false;
      out.witness = DomainElem(Rational(BigInt(static_cast<long>(k))));
      out.detail = "binomial coefficient c_" + std::to_string(k) + " = " +
                   c[k].str() + " is not integral; f(" + std::to_string(k) +
                   ") leaves the domain";
      return out;
    }
  }
  out.member = true;
  out.binomial = std::move(c);
  return out;
}

}  // namespace

MembershipResult is_member(const ZDomain&, const PolyQ& f) {
  return binomial_membership(f,
                             [](const Rational& r) { return r.is_integer(); });
}

MembershipResult is_member(const ZLocalDomain& dom, const PolyQ& f) {
  return binomial_membership(f, [&](const Rational& r) {
    return !divides(dom.p(), r.den());
  });
}

MembershipResult is_member(const FpTDomain& dom, const PolyFpT& f) {
  MembershipResult out;
  const BigInt& p = dom.p();
  // Clear f to g/c with c in F_p[T]: c = lcm of coefficient denominators.
  FpPoly c = FpPoly::constant(p, 1);
  for (const auto& coef : f.coeffs())
    c = divexact(c * coef.den(), gcd(c, coef.den()));
  if (c.is_one()) {
    out.member = true;
    out.detail = "coefficients lie in F_p[T]";
    return out;
  }
  std::vector<FpPoly> cleared;
  cleared.reserve(f.coeffs().size());
  for (const auto& coef : f.coeffs()) {
    RatFunc g = coef * RatFunc(c);
    if (!g.is_polynomial())
      throw std::logic_error("is_member: clearing failed");
    cleared.push_back(mod(g.num(), c));
  }

  int dc = c.degree();
  BigInt residues = pow(p, static_cast<unsigned long>(dc));
  if (!residues.fits_long() || residues.to_long() > kMembershipBudget)
    throw budget_error("is_member: " + residues.str() +
                       " residues exceed the enumeration budget");

  // Counting enumeration of representatives of F_p[T]/(c).
  long pl = p.to_long();
  std::vector<BigInt> digitsv(static_cast<size_t>(dc), BigInt(0));
  while (true) {
    FpPoly a(p, digitsv);
    // Horner evaluation of the cleared polynomial modulo c.
    FpPoly acc = FpPoly::zero(p);
    for (auto it = cleared.rbegin(); it != cleared.rend(); ++it)
      acc = mod(acc * a + *it, c);
    if (!acc.is_zero()) {
      out.member = false;
      out.witness = DomainElem(RatFunc(a));
      out.detail = "f(" + a.str() + ") is not integral (cleared value " +
                   acc.str() + " != 0 mod " + c.str() + ")";
      return out;
    }
    // increment
    size_t i = 0;
    for (; i < digitsv.size(); ++i) {
      digitsv[i] += BigInt(1);
      if (digitsv[i] < BigInt(pl)) break;
      digitsv[i] = BigInt(0);
    }
    if (i == digitsv.size()) break;
  }
  out.member = true;
  out.detail = "all " + residues.str() + " residues mod " + c.str() + " pass";
  return out;
}

MembershipResult is_member(const QuadOrderDomain& dom, const PolyQuad& f) {
  MembershipResult out;
  const BigInt& disc = dom.disc();
  // Clearing constant: lcm of the coordinate denominators in the (1, omega)
  // basis; a positive rational integer.
  BigInt c(1);
  std::vector<std::pair<Rational, Rational>> coords;
  for (const auto& coef : f.coeffs()) {
    Rational v = disc.is_even() ? coef.y() : coef.y() * Rational(2);
    Rational u = disc.is_even() ? coef.x() : coef.x() - coef.y();
    c = lcm(c, lcm(u.den(), v.den()));
    coords.emplace_back(u, v);
  }
  if (c.is_one()) {
    out.member = true;
    out.detail = "coefficients lie in the maximal order";
    return out;
  }
  BigInt residues = c * c;
  if (!residues.fits_long() || residues.to_long() > kMembershipBudget)
    throw budget_error("is_member: " + residues.str() +
                       " residues exceed the enumeration budget");

  // omega^2 = s + t*omega.
  BigInt s = disc.is_even() ? divexact(disc, BigInt(4))
                            : divexact(disc - BigInt(1), BigInt(4));
  BigInt t = disc.is_even() ? BigInt(0) : BigInt(1);

  // Cleared coefficients of c*f as integer coordinate pairs mod c.
  std::vector<std::pair<BigInt, BigInt>> cleared;
  cleared.reserve(coords.size());
  for (const auto& [u, v] : coords) {
    Rational cu = u * Rational(c), cv = v * Rational(c);
    if (!cu.is_integer() || !cv.is_integer())
      throw std::logic_error("is_member: clearing failed");
    cleared.emplace_back(fdiv_r(cu.num(), c), fdiv_r(cv.num(), c));
  }

  for (BigInt av(0); av < c; av += BigInt(1)) {
    for (BigInt au(0); au < c; au += BigInt(1)) {
      // Horner in O_K / c O_K.
      BigInt xu(0), xv(0);
      for (auto it = cleared.rbegin(); it != cleared.rend(); ++it) {
        BigInt nu = xu * au + xv * av * s + it->first;
        BigInt nv = xu * av + xv * au + xv * av * t + it->second;
        xu = fdiv_r(nu, c);
        xv = fdiv_r(nv, c);
      }
      if (!xu.is_zero() || !xv.is_zero()) {
        out.member = false;
        QuadElem a = dom.from_coords(au, av);
        out.witness = DomainElem(a);
        out.detail = "f(" + a.str() + ") is not integral (cleared value != 0 mod " +
                     c.str() + ")";
        return out;
      }
    }
  }
  out.member = true;
  out.detail = "all " + residues.str() + " residues mod " + c.str() + " pass";
  return out;
}

}  // namespace intpoly
