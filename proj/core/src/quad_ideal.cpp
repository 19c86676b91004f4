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

#include "intpoly/quad_ideal.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "intpoly/hnf.hpp"

namespace intpoly {

namespace {

constexpr long kMaxDiscAbs = 1'000'000;  // desk-scale cap for full tables

// omega^2 = s + t*omega for omega = sqrt(disc)/2 resp. (1+sqrt(disc))/2.
void omega_rule(const BigInt& disc, BigInt& s, BigInt& t) {
  if (disc.is_even()) {
    s = divexact(disc, BigInt(4));
    t = BigInt(0);
  } else {
    s = divexact(disc - BigInt(1), BigInt(4));
    t = BigInt(1);
  }
}

// b canonicalized into (-a, a] preserving b mod 2a.
BigInt normalize_b(const BigInt& b, const BigInt& a) {
  BigInt two_a = a * BigInt(2);
  BigInt r = fdiv_r(b, two_a);  // [0, 2a)
  if (r > a) r -= two_a;
  return r;
}

}  // namespace

QuadIdeal::QuadIdeal(BigInt a, BigInt b, BigInt disc, BigInt content)
    : content_(std::move(content)),
      a_(std::move(a)),
      b_(std::move(b)),
      disc_(std::move(disc)) {
  if (disc_.sign() >= 0)
    throw std::invalid_argument("QuadIdeal: discriminant must be negative");
  BigInt m4 = fdiv_r(disc_, BigInt(4));
  if (!(m4.is_zero() || m4.is_one()))
    throw std::invalid_argument("QuadIdeal: disc must be 0 or 1 mod 4");
  if (a_.sign() <= 0 || content_.sign() <= 0)
    throw std::invalid_argument("QuadIdeal: a and content must be positive");
  b_ = normalize_b(b_, a_);
  if (!divides(a_ * BigInt(4), b_ * b_ - disc_))
    throw std::invalid_argument("QuadIdeal: b^2 != disc (mod 4a)");
}

QuadIdeal QuadIdeal::unit_ideal(const BigInt& disc) {
  return QuadIdeal(BigInt(1), disc.is_even() ? BigInt(0) : BigInt(1), disc);
}

QuadIdeal QuadIdeal::principal_integer(const BigInt& disc, const BigInt& n) {
  if (n.sign() <= 0)
    throw std::invalid_argument("QuadIdeal: n must be positive");
  return QuadIdeal(BigInt(1), disc.is_even() ? BigInt(0) : BigInt(1), disc, n);
}

BigInt QuadIdeal::form_c() const {
  return divexact(b_ * b_ - disc_, a_ * BigInt(4));
}

QuadIdeal QuadIdeal::conjugate() const {
  return QuadIdeal(a_, -b_, disc_, content_);
}

std::strong_ordering operator<=>(const QuadIdeal& i, const QuadIdeal& j) {
  if (auto c = i.norm() <=> j.norm(); c != std::strong_ordering::equal)
    return c;
  if (auto c = i.a_ <=> j.a_; c != std::strong_ordering::equal) return c;
  return i.b_ <=> j.b_;
}

QuadIdeal operator*(const QuadIdeal& i, const QuadIdeal& j) {
  if (i.disc_ != j.disc_)
    throw std::invalid_argument("QuadIdeal: mixed discriminants");
  const BigInt& disc = i.disc_;
  BigInt s, t;
  omega_rule(disc, s, t);

  // Generators in coordinates (omega-part, 1-part); beta is the 1-part of
  // the second generator.
  auto gens = [&](const QuadIdeal& v) {
    BigInt beta = v.disc().is_even() ? divexact(v.b(), BigInt(2))
                                     : divexact(v.b() - BigInt(1), BigInt(2));
    return std::make_pair(std::make_pair(BigInt(0), v.content() * v.a()),
                          std::make_pair(v.content(), v.content() * beta));
  };
  auto [g1, g2] = gens(i);
  auto [h1, h2] = gens(j);

  auto mul_coords = [&](const std::pair<BigInt, BigInt>& x,
                        const std::pair<BigInt, BigInt>& y) {
    // (x2 + x1*omega)(y2 + y1*omega)
    BigInt one_part = x.second * y.second + x.first * y.first * s;
    BigInt omega_part =
        x.second * y.first + x.first * y.second + x.first * y.first * t;
    return IntVec{omega_part, one_part};
  };

  IntMat rows;
  for (const auto& x : {g1, g2})
    for (const auto& y : {h1, h2}) rows.push_back(mul_coords(x, y));
  IntMat h = hnf_rows(std::move(rows));
  if (h.size() != 2 || !h[1][0].is_zero())
    throw std::logic_error("QuadIdeal: product is not a full module");

  BigInt content = h[0][0];
  BigInt c_beta = h[0][1];
  BigInt c_a = h[1][1];
  if (!divides(content, c_beta) || !divides(content, c_a))
    throw std::logic_error("QuadIdeal: product is not an ideal");
  BigInt a = divexact(c_a, content);
  BigInt beta = divexact(c_beta, content);
  BigInt b = disc.is_even() ? beta * BigInt(2) : beta * BigInt(2) + BigInt(1);
  QuadIdeal out(a, b, disc, content);
  if (out.norm() != i.norm() * j.norm())
    throw std::logic_error("QuadIdeal: norm not multiplicative");
  return out;
}

bool QuadIdeal::contains(const QuadElem& e) const {
  if (fundamental_discriminant(e.d()) != disc_) return false;
  // Coordinates u + v*omega of e.
  Rational vq = disc_.is_even() ? e.y() : e.y() * Rational(2);
  Rational uq = disc_.is_even() ? e.x() : e.x() - e.y();
  if (!vq.is_integer() || !uq.is_integer()) return false;
  BigInt u = uq.num(), v = vq.num();
  BigInt beta = disc_.is_even() ? divexact(b_, BigInt(2))
                                : divexact(b_ - BigInt(1), BigInt(2));
  if (!divides(content_, v)) return false;
  return divides(content_ * a_, u - v * beta);
}

std::string QuadIdeal::str() const {
  std::string prim = "(" + a_.str() + "," + b_.str() + ")";
  if (a_.is_one()) prim = "(1)";
  if (content_.is_one()) return prim;
  if (a_.is_one()) return "(" + content_.str() + ")";
  return content_.str() + "*" + prim;
}

std::ostream& operator<<(std::ostream& os, const QuadIdeal& v) {
  return os << v.str();
}

QuadIdeal pow(const QuadIdeal& i, int e) {
  if (e < 0) throw std::domain_error("QuadIdeal pow: negative exponent");
  QuadIdeal acc = QuadIdeal::unit_ideal(i.disc());
  QuadIdeal base = i;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

QuadIdeal reduce(const QuadIdeal& i) {
  BigInt a = i.a(), b = i.b();
  const BigInt& disc = i.disc();
  auto form_c = [&](const BigInt& aa, const BigInt& bb) {
    return divexact(bb * bb - disc, aa * BigInt(4));
  };
  BigInt c = form_c(a, b);
  while (a > c) {
    // rho step: (a, b, c) -> (c, -b, a), then renormalize b.
    std::swap(a, c);
    b = normalize_b(-b, a);
    c = form_c(a, b);
  }
  if (a == c && b.sign() < 0) b = -b;
  return QuadIdeal(a, b, disc);
}

bool is_principal(const QuadIdeal& i) { return reduce(i).a().is_one(); }

std::optional<QuadElem> principal_generator_of(const QuadIdeal& i) {
  if (!is_principal(i)) return std::nullopt;
  const BigInt& disc = i.disc();
  BigInt d = disc.is_even() ? divexact(disc, BigInt(4)) : disc;
  const BigInt& a = i.a();
  BigInt beta = disc.is_even() ? divexact(i.b(), BigInt(2))
                               : divexact(i.b() - BigInt(1), BigInt(2));

  auto member = [&](const BigInt& u, const BigInt& v) {
    return divides(a, u - v * beta);
  };
  auto to_elem = [&](const BigInt& u, const BigInt& v) {
    Rational x, y;
    if (disc.is_even()) {
      x = Rational(u);
      y = Rational(v);
    } else {
      x = Rational(u) + Rational(v, BigInt(2));
      y = Rational(v, BigInt(2));
    }
    QuadElem g(x, y, d);
    Rational scale(i.content());
    return QuadElem(g.x() * scale, g.y() * scale, d);
  };

  // Norm-a elements of the primitive part: u^2 - d v^2 = a (even disc) or
  // u^2 + uv + (1-disc)/4 v^2 = a (odd disc).  |v| is bounded since d < 0.
  if (disc.is_even()) {
    BigInt vmax = isqrt(fdiv_q(a * BigInt(4), abs(disc)));
    for (BigInt v(0); v <= vmax; v += BigInt(1)) {
      BigInt rest = a + d * v * v;
      if (rest.sign() < 0) break;
      auto u = perfect_sqrt(rest);
      if (!u) continue;
      for (const BigInt& vv : {v, -v}) {
        if (member(*u, vv)) return to_elem(*u, vv);
        if (!u->is_zero() && member(-*u, vv)) return to_elem(-*u, vv);
        if (v.is_zero()) break;
      }
    }
  } else {
    BigInt vmax = isqrt(fdiv_q(a * BigInt(16), abs(disc)));
    for (BigInt v(0); v <= vmax; v += BigInt(1)) {
      for (const BigInt& vv : {v, -v}) {
        BigInt delta = disc * vv * vv + a * BigInt(4);
        if (delta.sign() < 0) continue;
        auto sq = perfect_sqrt(delta);
        if (!sq) {
          if (v.is_zero()) break;
          continue;
        }
        for (const BigInt& sgn : {*sq, -*sq}) {
          BigInt num = -vv + sgn;
          if (!num.is_even()) continue;
          BigInt u = divexact(num, BigInt(2));
          if (member(u, vv)) return to_elem(u, vv);
          if (sq->is_zero()) break;
        }
        if (v.is_zero()) break;
      }
    }
  }
  // A principal ideal always has a generator of its norm.
  throw std::logic_error("QuadIdeal: generator search failed");
}

BigInt fundamental_discriminant(const BigInt& d) {
  if (d.sign() >= 0 || !is_squarefree(d))
    throw std::invalid_argument(
        "fundamental_discriminant: d must be squarefree and negative");
  return fdiv_r(d, BigInt(4)).is_one() ? d : d * BigInt(4);
}

bool is_fundamental_discriminant(const BigInt& disc) {
  if (disc.sign() >= 0) return false;
  BigInt r = fdiv_r(disc, BigInt(4));
  if (r.is_one()) return is_squarefree(disc);
  if (!r.is_zero()) return false;
  BigInt d = divexact(disc, BigInt(4));
  BigInt dm = fdiv_r(d, BigInt(4));
  return (dm == BigInt(2) || dm == BigInt(3)) && is_squarefree(d);
}

SplitType splitting_type(const BigInt& disc, const BigInt& p) {
  int k = kronecker(disc, p);
  if (k == 1) return SplitType::kSplit;
  if (k == -1) return SplitType::kInert;
  return SplitType::kRamified;
}

std::vector<QuadIdeal> primes_above(const BigInt& disc, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("primes_above: p not prime");
  SplitType st = splitting_type(disc, p);
  if (st == SplitType::kInert)
    return {QuadIdeal::principal_integer(disc, p)};

  BigInt b;
  if (p == BigInt(2)) {
    if (disc.is_odd()) {
      b = BigInt(1);  // disc = 1 mod 8, split
    } else {
      BigInt m8 = fdiv_r(disc, BigInt(8));
      b = m8.is_zero() ? BigInt(0) : BigInt(2);
    }
  } else {
    auto r = sqrt_mod(disc, p);
    if (!r) throw std::logic_error("primes_above: missing square root");
    // Match the parity of disc so that b^2 = disc mod 4p as well.
    b = (fdiv_r(*r, BigInt(2)) == fdiv_r(disc, BigInt(2))) ? *r : p - *r;
  }
  QuadIdeal first(p, b, disc);
  if (st == SplitType::kRamified) return {first};
  QuadIdeal second = first.conjugate();
  if (second == first)
    throw std::logic_error("primes_above: split primes not distinct");
  return {first, second};
}

ClassGroupTable::ClassGroupTable(const BigInt& disc) : disc_(disc) {
  if (!is_fundamental_discriminant(disc))
    throw std::invalid_argument("class_group: non-fundamental discriminant");
  if (abs(disc) > BigInt(kMaxDiscAbs))
    throw std::invalid_argument("class_group: |disc| beyond desk-scale cap");

  BigInt amax = isqrt(fdiv_q(abs(disc), BigInt(3)));
  for (BigInt a(1); a <= amax; a += BigInt(1)) {
    BigInt bstart = disc.is_even() ? BigInt(0) : BigInt(1);
    for (BigInt b = bstart - a * BigInt(2); b <= a; b += BigInt(2)) {
      if (b <= -a) continue;
      BigInt num = b * b - disc;
      if (!divides(a * BigInt(4), num)) continue;
      BigInt c = divexact(num, a * BigInt(4));
      if (c < a) continue;
      if (a == c && b.sign() < 0) continue;
      BigInt g = gcd(gcd(a, abs(b)), c);
      if (!g.is_one()) continue;  // never hit for fundamental disc
      forms_.emplace_back(a, b, disc);
    }
  }
  std::sort(forms_.begin(), forms_.end());
  if (forms_.empty() || !forms_[0].a().is_one())
    throw std::logic_error("class_group: identity class missing");

  int h = static_cast<int>(forms_.size());
  table_.assign(static_cast<size_t>(h), std::vector<int>(h, -1));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      int k = class_of(forms_[static_cast<size_t>(i)] *
                       forms_[static_cast<size_t>(j)]);
      table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
      table_[static_cast<size_t>(j)][static_cast<size_t>(i)] = k;
    }
  }
  // Sanity: each row must be a permutation with an inverse hitting identity.
  for (int i = 0; i < h; ++i) {
    std::vector<bool> seen(static_cast<size_t>(h), false);
    bool has_identity = false;
    for (int j = 0; j < h; ++j) {
      int k = table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (seen[static_cast<size_t>(k)])
        throw std::logic_error("class_group: row not a permutation");
      seen[static_cast<size_t>(k)] = true;
      if (k == identity()) has_identity = true;
    }
    if (!has_identity)
      throw std::logic_error("class_group: missing inverse");
  }
}

int ClassGroupTable::compose(int i, int j) const {
  return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int ClassGroupTable::inverse(int i) const {
  for (int j = 0; j < h(); ++j)
    if (compose(i, j) == identity()) return j;
  throw std::logic_error("class_group: no inverse");
}

int ClassGroupTable::class_of(const QuadIdeal& ideal) const {
  if (ideal.disc() != disc_)
    throw std::invalid_argument("class_of: wrong discriminant");
  QuadIdeal r = reduce(ideal);
  auto it = std::lower_bound(forms_.begin(), forms_.end(), r);
  if (it == forms_.end() || !(*it == r))
    throw std::logic_error("class_of: reduced form not in table");
  return static_cast<int>(it - forms_.begin());
}

int ClassGroupTable::element_order(int i) const {
  int ord = 1;
  int x = i;
  while (x != identity()) {
    x = compose(x, i);
    ++ord;
  }
  return ord;
}

ClassGroupTable class_group(const BigInt& disc) {
  return ClassGroupTable(disc);
}

PogResult polya_ostrowski_group(const BigInt& d) {
  BigInt disc = fundamental_discriminant(d);
  return polya_ostrowski_group(d, class_group(disc));
}

PogResult polya_ostrowski_group(const BigInt& d,
                                const ClassGroupTable& table) {
  PogResult out;
  out.d = d;
  out.disc = fundamental_discriminant(d);
  if (table.disc() != out.disc)
    throw std::invalid_argument("polya_ostrowski_group: table mismatch");
  out.h = table.h();

  BigInt max_ramified(0);
  for (const auto& [p, e] : factor(abs(out.disc))) {
    max_ramified = p;
    for (const auto& ideal : primes_above(out.disc, p))
      out.generators.push_back(table.class_of(ideal));
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(
      std::unique(out.generators.begin(), out.generators.end()),
      out.generators.end());

  auto closure = [&](const std::vector<int>& gens) {
    std::vector<int> members{table.identity()};
    std::vector<bool> in(static_cast<size_t>(table.h()), false);
    in[static_cast<size_t>(table.identity())] = true;
    std::vector<int> frontier = members;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int g : gens) {
          int y = table.compose(x, g);
          if (!in[static_cast<size_t>(y)]) {
            in[static_cast<size_t>(y)] = true;
            members.push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
  };
  out.subgroup = closure(out.generators);
  out.order = static_cast<int>(out.subgroup.size());
  out.is_trivial = out.order == 1;
  out.is_proper = out.order < out.h;
  for (int i : out.subgroup) out.element_orders.push_back(table.element_order(i));

  // The classes of Pi_q over prime powers q generate the same subgroup
  // (unramified primes contribute the identity), so closing over q up to
  // the largest ramified prime must reproduce it.
  std::vector<int> pi_classes;
  for (BigInt p(2); p <= max_ramified; p += BigInt(1)) {
    if (!is_prime(p)) continue;
    SplitType st = splitting_type(out.disc, p);
    if (st == SplitType::kRamified) {
      pi_classes.push_back(table.class_of(primes_above(out.disc, p)[0]));
    } else if (st == SplitType::kSplit) {
      auto pr = primes_above(out.disc, p);
      pi_classes.push_back(table.class_of(pr[0] * pr[1]));
    } else {
      pi_classes.push_back(table.class_of(primes_above(out.disc, p)[0]));
    }
  }
  if (closure(pi_classes) != out.subgroup)
    throw std::logic_error(
        "polya_ostrowski_group: generating-set cross-check failed");
  return out;
}

}  // namespace intpoly
