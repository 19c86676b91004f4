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

#include "intpoly/domain.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "intpoly/hnf.hpp"

namespace intpoly {

DomainSpec DomainSpec::localized_integers(const BigInt& p) {
  if (!is_prime(p))
    throw std::invalid_argument("DomainSpec: Zloc parameter must be prime");
  return {DomainKind::kLocalizedIntegers, p};
}

DomainSpec DomainSpec::finite_field_poly(const BigInt& p) {
  if (!is_prime(p))
    throw std::invalid_argument("DomainSpec: FpT parameter must be prime");
  return {DomainKind::kFiniteFieldPolyRing, p};
}

DomainSpec DomainSpec::imag_quadratic_order(const BigInt& d) {
  if (d.sign() >= 0 || !is_squarefree(d))
    throw std::invalid_argument(
        "DomainSpec: Quad parameter must be squarefree and negative");
  return {DomainKind::kImagQuadraticOrder, d};
}

DomainSpec DomainSpec::parse(const std::string& text) {
  if (text == "Z") return integers();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    BigInt param(text.substr(colon + 1));
    if (head == "Zloc") return localized_integers(param);
    if (head == "FpT") return finite_field_poly(param);
    if (head == "Quad") return imag_quadratic_order(param);
  }
  throw std::invalid_argument("DomainSpec: cannot parse \"" + text +
                              "\" (expected Z, Zloc:p, FpT:p, or Quad:d)");
}

std::string DomainSpec::str() const {
  switch (kind) {
    case DomainKind::kIntegers:
      return "Z";
    case DomainKind::kLocalizedIntegers:
      return "Zloc:" + param.str();
    case DomainKind::kFiniteFieldPolyRing:
      return "FpT:" + param.str();
    case DomainKind::kImagQuadraticOrder:
      return "Quad:" + param.str();
  }
  throw std::logic_error("DomainSpec: bad kind");
}

std::string PrimeDesc::str() const {
  if (const auto* p = std::get_if<BigInt>(&data)) return p->str();
  if (const auto* g = std::get_if<FpPoly>(&data)) return g->str();
  return std::get<QuadIdeal>(data).str();
}

std::strong_ordering operator<=>(const PrimeDesc& a, const PrimeDesc& b) {
  if (auto c = a.norm <=> b.norm; c != std::strong_ordering::equal) return c;
  if (a.data.index() != b.data.index())
    return a.data.index() <=> b.data.index();
  if (const auto* p = std::get_if<BigInt>(&a.data))
    return *p <=> std::get<BigInt>(b.data);
  if (const auto* g = std::get_if<FpPoly>(&a.data))
    return *g <=> std::get<FpPoly>(b.data);
  return std::get<QuadIdeal>(a.data) <=> std::get<QuadIdeal>(b.data);
}

void FactoredIdeal::normalize() {
  std::sort(factors.begin(), factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<PrimeDesc, BigInt>> out;
  for (auto& f : factors) {
    if (!out.empty() && out.back().first == f.first)
      out.back().second += f.second;
    else
      out.push_back(std::move(f));
  }
  std::erase_if(out, [](const auto& f) { return f.second.is_zero(); });
  factors = std::move(out);
}

std::string FactoredIdeal::str() const {
  if (factors.empty()) return "(1)";
  std::string s;
  for (const auto& [p, e] : factors) {
    if (!s.empty()) s += "*";
    s += p.str();
    if (!e.is_one()) s += "^" + e.str();
  }
  return s;
}

std::vector<PrimeDesc> primes_of_norm_at_most(const DomainSpec& domain,
                                              const BigInt& bound) {
  std::vector<PrimeDesc> out;
  switch (domain.kind) {
    case DomainKind::kIntegers: {
      for (BigInt p(2); p <= bound; p += BigInt(1))
        if (is_prime(p)) out.push_back({domain, p, p});
      break;
    }
    case DomainKind::kLocalizedIntegers: {
      if (domain.param <= bound)
        out.push_back({domain, domain.param, domain.param});
      break;
    }
    case DomainKind::kFiniteFieldPolyRing: {
      const BigInt& p = domain.param;
      BigInt norm = p;
      for (int e = 1; norm <= bound; ++e, norm *= p) {
        for (const auto& g : monic_irreducibles(p, e))
          out.push_back({domain, g, norm});
      }
      break;
    }
    case DomainKind::kImagQuadraticOrder: {
      BigInt disc = fundamental_discriminant(domain.param);
      for (BigInt p(2); p * p <= bound || p <= bound; p += BigInt(1)) {
        if (!is_prime(p)) continue;
        SplitType st = splitting_type(disc, p);
        if (st == SplitType::kInert) {
          if (p * p <= bound)
            out.push_back({domain, primes_above(disc, p)[0], p * p});
        } else if (p <= bound) {
          for (const auto& ideal : primes_above(disc, p))
            out.push_back({domain, ideal, p});
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimeDesc& a, const PrimeDesc& b) { return a < b; });
  return out;
}

FactoredIdeal pi_ideal(const DomainSpec& domain, const BigInt& n) {
  if (n < BigInt(2)) throw std::invalid_argument("pi_ideal: n >= 2 required");
  FactoredIdeal out{domain, {}};
  // Residue fields are finite fields, so only prime-power norms occur.
  if (!prime_power_decompose(n)) return out;
  for (auto& p : primes_of_norm_at_most(domain, n)) {
    if (p.norm == n) out.factors.emplace_back(std::move(p), BigInt(1));
  }
  out.normalize();
  return out;
}

std::string domain_elem_str(const DomainElem& e) {
  if (const auto* r = std::get_if<Rational>(&e)) return r->str();
  if (const auto* f = std::get_if<RatFunc>(&e)) return f->str();
  return std::get<QuadElem>(e).str();
}

namespace {

int exponent_as_int(const BigInt& e) {
  if (!e.fits_long())
    throw std::overflow_error("FactoredIdeal: exponent too large");
  long v = e.to_long();
  if (v > (1 << 28) || v < -(1 << 28))
    throw std::overflow_error("FactoredIdeal: exponent too large");
  return static_cast<int>(v);
}

std::optional<DomainElem> quad_factored_generator(const FactoredIdeal& ideal) {
  BigInt disc = fundamental_discriminant(ideal.domain.param);
  // Split into numerator and denominator ideal products.
  QuadIdeal num = QuadIdeal::unit_ideal(disc);
  QuadIdeal den = QuadIdeal::unit_ideal(disc);
  for (const auto& [p, e] : ideal.factors) {
    const auto& q = std::get<QuadIdeal>(p.data);
    int k = exponent_as_int(e);
    if (k > 0)
      num = num * pow(q, k);
    else
      den = den * pow(q, -k);
  }
  // num/den = num * conj(den) / N(den); the integral part carries the class.
  QuadIdeal integral = num * den.conjugate();
  auto gen = principal_generator_of(integral);
  if (!gen) return std::nullopt;
  Rational scale = Rational(BigInt(1), den.norm());
  return QuadElem(gen->x() * scale, gen->y() * scale, gen->d());
}

}  // namespace

std::optional<DomainElem> principal_generator(const FactoredIdeal& ideal) {
  switch (ideal.domain.kind) {
    case DomainKind::kIntegers:
    case DomainKind::kLocalizedIntegers: {
      Rational acc(1);
      for (const auto& [p, e] : ideal.factors) {
        Rational base(std::get<BigInt>(p.data));
        int k = exponent_as_int(e);
        Rational pw(1);
        for (int i = 0; i < (k < 0 ? -k : k); ++i) pw *= base;
        acc *= (k < 0) ? pw.inverse() : pw;
      }
      return DomainElem(acc);
    }
    case DomainKind::kFiniteFieldPolyRing: {
      RatFunc acc = RatFunc::one(ideal.domain.param);
      for (const auto& [p, e] : ideal.factors) {
        RatFunc base(std::get<FpPoly>(p.data));
        int k = exponent_as_int(e);
        RatFunc pw = RatFunc::one(ideal.domain.param);
        for (int i = 0; i < (k < 0 ? -k : k); ++i) pw *= base;
        acc *= (k < 0) ? pw.inverse() : pw;
      }
      return DomainElem(acc);
    }
    case DomainKind::kImagQuadraticOrder:
      return quad_factored_generator(ideal);
  }
  throw std::logic_error("principal_generator: bad kind");
}

// --------------------------------------------------------------------------
// ZDomain / ZLocalDomain
// --------------------------------------------------------------------------

namespace {

// Left-fold extended gcd with back substitution; the t_i must be coprime as
// a family.  Deterministic: folds in input order.
std::vector<BigInt> bezout_integers(const std::vector<BigInt>& t) {
  if (t.empty()) throw std::invalid_argument("bezout: empty family");
  std::vector<BigInt> coef{BigInt(1)};
  BigInt g = t[0];
  for (size_t i = 1; i < t.size(); ++i) {
    XgcdResult r = xgcd(g, t[i]);
    for (auto& c : coef) c *= r.x;
    coef.push_back(r.y);
    g = r.g;
  }
  if (!g.is_one())
    throw std::logic_error("bezout: family gcd is not 1 (gcd = " + g.str() +
                           ")");
  return coef;
}

BigInt rational_to_integer(const Rational& r, const char* who) {
  if (!r.is_integer())
    throw std::invalid_argument(std::string(who) + ": element not integral");
  return r.num();
}

}  // namespace

std::optional<Rational> ZDomain::pi_generator(const BigInt& q) const {
  if (q < BigInt(2)) throw std::invalid_argument("pi_generator: q >= 2");
  return is_prime(q) ? Rational(q) : Rational(1);
}

std::string ZDomain::obstruction_info(const BigInt&) const {
  return "";  // Pi_q is always principal over Z
}

std::vector<Rational> ZDomain::bezout(const std::vector<Rational>& t) const {
  std::vector<BigInt> ints;
  ints.reserve(t.size());
  for (const auto& r : t) ints.push_back(rational_to_integer(r, "bezout"));
  std::vector<Rational> out;
  for (auto& c : bezout_integers(ints)) out.emplace_back(c);
  return out;
}

ZLocalDomain::ZLocalDomain(BigInt p) : p_(std::move(p)) {
  if (!is_prime(p_))
    throw std::invalid_argument("ZLocalDomain: p must be prime");
}

std::optional<Rational> ZLocalDomain::pi_generator(const BigInt& q) const {
  if (q < BigInt(2)) throw std::invalid_argument("pi_generator: q >= 2");
  return q == p_ ? Rational(p_) : Rational(1);
}

std::string ZLocalDomain::obstruction_info(const BigInt&) const { return ""; }

std::vector<Rational> ZLocalDomain::bezout(
    const std::vector<Rational>& t) const {
  // The t_i are integers here (products of p and units); integer Bezout
  // coefficients are in particular p-integral.
  return ZDomain{}.bezout(t);
}

// --------------------------------------------------------------------------
// FpTDomain
// --------------------------------------------------------------------------

FpTDomain::FpTDomain(BigInt p) : p_(std::move(p)) {
  if (!is_prime(p_)) throw std::invalid_argument("FpTDomain: p must be prime");
}

std::optional<RatFunc> FpTDomain::pi_generator(const BigInt& q) const {
  if (q < BigInt(2)) throw std::invalid_argument("pi_generator: q >= 2");
  auto pp = prime_power_decompose(q);
  if (!pp || pp->first != p_) return RatFunc::one(p_);
  int e = pp->second;
  FpPoly direct = FpPoly::constant(p_, 1);
  for (const auto& g : monic_irreducibles(p_, e)) direct = direct * g;
  FpPoly via_moebius = irreducible_product_moebius(p_, e);
  if (!(direct == via_moebius))
    throw std::logic_error("pi_generator: Moebius product mismatch");
  return RatFunc(direct);
}

std::string FpTDomain::obstruction_info(const BigInt&) const { return ""; }

std::vector<RatFunc> FpTDomain::bezout(const std::vector<RatFunc>& t) const {
  if (t.empty()) throw std::invalid_argument("bezout: empty family");
  std::vector<FpPoly> polys;
  polys.reserve(t.size());
  for (const auto& r : t) {
    if (!r.is_polynomial())
      throw std::invalid_argument("bezout: element not integral");
    polys.push_back(r.num());
  }
  std::vector<FpPoly> coef{FpPoly::constant(p_, 1)};
  FpPoly g = polys[0];
  for (size_t i = 1; i < polys.size(); ++i) {
    FpXgcdResult r = xgcd(g, polys[i]);
    for (auto& c : coef) c = c * r.x;
    coef.push_back(r.y);
    g = r.g;
  }
  if (!g.is_one())
    throw std::logic_error("bezout: family gcd is not a unit");
  std::vector<RatFunc> out;
  out.reserve(coef.size());
  for (auto& c : coef) out.emplace_back(std::move(c));
  return out;
}

// --------------------------------------------------------------------------
// QuadOrderDomain
// --------------------------------------------------------------------------

QuadOrderDomain::QuadOrderDomain(BigInt d) : d_(std::move(d)) {
  disc_ = fundamental_discriminant(d_);
  table_ = std::make_shared<const ClassGroupTable>(disc_);
}

std::optional<std::pair<BigInt, BigInt>> QuadOrderDomain::to_coords(
    const Elem& e) const {
  if (e.d() != d_)
    throw std::invalid_argument("QuadOrderDomain: element from wrong field");
  Rational vq = disc_.is_even() ? e.y() : e.y() * Rational(2);
  Rational uq = disc_.is_even() ? e.x() : e.x() - e.y();
  if (!vq.is_integer() || !uq.is_integer()) return std::nullopt;
  return std::make_pair(uq.num(), vq.num());
}

QuadElem QuadOrderDomain::from_coords(const BigInt& u, const BigInt& v) const {
  if (disc_.is_even()) return QuadElem(Rational(u), Rational(v), d_);
  return QuadElem(Rational(u) + Rational(v, BigInt(2)),
                  Rational(v, BigInt(2)), d_);
}

bool QuadOrderDomain::is_integral(const Elem& e) const {
  return to_coords(e).has_value();
}

std::optional<QuadElem> QuadOrderDomain::pi_generator(const BigInt& q) const {
  if (q < BigInt(2)) throw std::invalid_argument("pi_generator: q >= 2");
  FactoredIdeal ideal = pi_ideal(spec(), q);
  if (ideal.is_unit()) return field().one();
  auto gen = principal_generator(ideal);
  if (!gen) return std::nullopt;
  return std::get<QuadElem>(*gen);
}

std::string QuadOrderDomain::obstruction_info(const BigInt& q) const {
  FactoredIdeal ideal = pi_ideal(spec(), q);
  if (ideal.is_unit()) return "";
  QuadIdeal prod = QuadIdeal::unit_ideal(disc_);
  for (const auto& [p, e] : ideal.factors)
    prod = prod * pow(std::get<QuadIdeal>(p.data), exponent_as_int(e));
  QuadIdeal cls = reduce(prod);
  if (cls.a().is_one()) return "";
  return "Pi_" + q.str() + " = " + ideal.str() +
         " lies in the nontrivial ideal class " + cls.str() +
         " (class index " + std::to_string(table_->class_of(cls)) + ")";
}

std::vector<QuadElem> QuadOrderDomain::bezout(
    const std::vector<QuadElem>& t) const {
  if (t.empty()) throw std::invalid_argument("bezout: empty family");
  // Unknowns a_i = u_i + v_i*omega; one O_K-equation sum a_i t_i = 1 becomes
  // a 2 x 2m integer system in the Z-basis (1, omega).
  BigInt s, tt;
  if (disc_.is_even()) {
    s = divexact(disc_, BigInt(4));
    tt = BigInt(0);
  } else {
    s = divexact(disc_ - BigInt(1), BigInt(4));
    tt = BigInt(1);
  }
  size_t m = t.size();
  IntMat a(2, IntVec(2 * m, BigInt(0)));
  for (size_t i = 0; i < m; ++i) {
    auto coords = to_coords(t[i]);
    if (!coords)
      throw std::invalid_argument("bezout: element not integral");
    auto [c1, c2] = *coords;  // t_i = c1 + c2*omega
    // column 2i: coefficient of u_i; column 2i+1: coefficient of v_i,
    // using omega * t_i = c2*s + (c1 + c2*tt)*omega.
    a[0][2 * i] = c1;
    a[1][2 * i] = c2;
    a[0][2 * i + 1] = c2 * s;
    a[1][2 * i + 1] = c1 + c2 * tt;
  }
  IntVec b{BigInt(1), BigInt(0)};
  auto x = solve_integer(a, b);
  if (!x)
    throw std::logic_error(
        "bezout: integer system has no solution (Bezout infeasibility)");
  std::vector<QuadElem> out;
  out.reserve(m);
  for (size_t i = 0; i < m; ++i)
    out.push_back(from_coords((*x)[2 * i], (*x)[2 * i + 1]));
  return out;
}

}  // namespace intpoly
