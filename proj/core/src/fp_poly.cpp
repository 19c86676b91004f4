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

#include "intpoly/fp_poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace intpoly {

FpPoly::FpPoly(BigInt p, std::vector<BigInt> coeffs)
    : p_(std::move(p)), coeffs_(std::move(coeffs)) {
  if (!is_prime(p_)) throw std::invalid_argument("FpPoly: p must be prime");
  reduce_and_trim();
}

void FpPoly::reduce_and_trim() {
  for (auto& c : coeffs_) c = fdiv_r(c, p_);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void FpPoly::check_same_field(const FpPoly& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("FpPoly: mixed characteristics");
}

FpPoly FpPoly::constant(const BigInt& p, const BigInt& c) {
  return FpPoly(p, {c});
}

FpPoly FpPoly::variable(const BigInt& p) {
  return FpPoly(p, {BigInt(0), BigInt(1)});
}

const BigInt& FpPoly::leading() const {
  if (is_zero()) throw std::domain_error("FpPoly: leading of zero");
  return coeffs_.back();
}

BigInt FpPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<size_t>(i)];
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  BigInt inv = xgcd(leading(), p_).x;
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c) v = fdiv_r(v * inv, p_);
  return FpPoly(p_, std::move(c));
}

BigInt FpPoly::norm() const {
  if (is_zero()) throw std::domain_error("FpPoly: norm of zero");
  return pow(p_, static_cast<unsigned long>(degree()));
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_same_field(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = fdiv_r(coeffs_[i] + o.coeffs_[i], p_);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_same_field(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = fdiv_r(coeffs_[i] - o.coeffs_[i], p_);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a) {
  std::vector<BigInt> c = a.coeffs_;
  for (auto& v : c) v = -v;
  return FpPoly(a.p_, std::move(c));
}

bool operator==(const FpPoly& a, const FpPoly& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
  a.check_same_field(b);
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  for (int i = a.degree(); i >= 0; --i) {
    auto c = a.coeffs_[static_cast<size_t>(i)] <=>
             b.coeffs_[static_cast<size_t>(i)];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

BigInt FpPoly::eval(const BigInt& t) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = fdiv_r(acc * t + *it, p_);
  return acc;
}

std::string FpPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c.str();
    } else {
      if (!c.is_one()) out += c.str() + "*";
      out += (i == 1) ? "T" : "T^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FpPoly& v) {
  return os << v.str();
}

FpDivMod divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("FpPoly: division by zero");
  const BigInt& p = a.p();
  if (p != b.p()) throw std::invalid_argument("FpPoly: mixed characteristics");
  std::vector<BigInt> rem = a.coeffs();
  int db = b.degree();
  BigInt lead_inv = xgcd(b.leading(), p).x;
  std::vector<BigInt> quot;
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr >= db) quot.assign(static_cast<size_t>(dr - db + 1), BigInt(0));
  while (dr >= db) {
    BigInt f = fdiv_r(rem[static_cast<size_t>(dr)] * lead_inv, p);
    quot[static_cast<size_t>(dr - db)] = f;
    if (!f.is_zero()) {
      for (int i = 0; i <= db; ++i) {
        size_t k = static_cast<size_t>(dr - db + i);
        rem[k] = fdiv_r(rem[k] - f * b.coeff(i), p);
      }
    }
    --dr;
    while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
    rem.resize(static_cast<size_t>(dr + 1));
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly mod(const FpPoly& a, const FpPoly& b) { return divmod(a, b).rem; }

bool divides(const FpPoly& d, const FpPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return mod(a, d).is_zero();
}

FpPoly divexact(const FpPoly& a, const FpPoly& b) {
  auto qr = divmod(a, b);
  if (!qr.rem.is_zero())
    throw std::domain_error("FpPoly divexact: not divisible");
  return qr.quot;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpXgcdResult xgcd(const FpPoly& a, const FpPoly& b) {
  const BigInt& p = a.p();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly::zero(p);
  FpPoly t0 = FpPoly::zero(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    FpPoly s2 = s0 - qr.quot * s1;
    FpPoly t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && !r0.is_monic()) {
    BigInt inv = xgcd(r0.leading(), p).x;
    FpPoly scale = FpPoly::constant(p, inv);
    r0 = r0 * scale;
    s0 = s0 * scale;
    t0 = t0 * scale;
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

FpPoly pow(const FpPoly& a, const BigInt& e) {
  if (e.sign() < 0) throw std::domain_error("FpPoly pow: negative exponent");
  FpPoly base = a;
  FpPoly acc = FpPoly::constant(a.p(), 1);
  BigInt k = e;
  while (!k.is_zero()) {
    if (k.is_odd()) acc = acc * base;
    k = k / BigInt(2);
    if (!k.is_zero()) base = base * base;
  }
  return acc;
}

bool is_irreducible(const FpPoly& f) {
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  // Trial division by all monic polynomials of degree <= d/2.
  for (int e = 1; 2 * e <= d; ++e) {
    for (const auto& g : monic_polys(f.p(), e)) {
      if (divides(g, f)) return false;
    }
  }
  return true;
}

std::vector<FpPoly> monic_polys(const BigInt& p, int e) {
  if (e < 0) return {};
  if (!p.fits_long())
    throw std::overflow_error("monic_polys: p too large for enumeration");
  long pl = p.to_long();
  std::vector<FpPoly> out;
  std::vector<BigInt> digits(static_cast<size_t>(e) + 1, BigInt(0));
  digits.back() = BigInt(1);
  while (true) {
    out.emplace_back(p, digits);
    int i = 0;
    for (; i < e; ++i) {
      digits[static_cast<size_t>(i)] += BigInt(1);
      if (digits[static_cast<size_t>(i)] < BigInt(pl)) break;
      digits[static_cast<size_t>(i)] = BigInt(0);
    }
    if (i == e) break;
  }
  return out;
}

std::vector<FpPoly> monic_irreducibles(const BigInt& p, int e) {
  std::vector<FpPoly> out;
  for (const auto& f : monic_polys(p, e))
    if (is_irreducible(f)) out.push_back(f);
  return out;
}

FpPoly irreducible_product_moebius(const BigInt& p, int e) {
  if (e <= 0) throw std::domain_error("irreducible_product_moebius: e >= 1");
  auto moebius = [](int n) {
    int m = 1;
    for (int q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  // T^(p^k) - T for each divisor k of e.
  auto frob_poly = [&](int k) {
    BigInt deg = pow(p, static_cast<unsigned long>(k));
    if (!deg.fits_long())
      throw std::overflow_error("irreducible_product_moebius: p^k too large");
    std::vector<BigInt> c(static_cast<size_t>(deg.to_long()) + 1, BigInt(0));
    c[1] = BigInt(-1);
    c.back() = BigInt(1);
    return FpPoly(p, std::move(c));
  };
  FpPoly num = FpPoly::constant(p, 1);
  FpPoly den = FpPoly::constant(p, 1);
  for (int k = 1; k <= e; ++k) {
    if (e % k != 0) continue;
    int mu = moebius(e / k);
    if (mu == 1) num = num * frob_poly(k);
    if (mu == -1) den = den * frob_poly(k);
  }
  return divexact(num, den);
}

}  // namespace intpoly
