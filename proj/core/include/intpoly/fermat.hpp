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

#ifndef INTPOLY_FERMAT_HPP
#define INTPOLY_FERMAT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "intpoly/domain.hpp"
#include "intpoly/wexp.hpp"

namespace intpoly {

/// Thrown when a construction needs a generator of Pi_q but the ideal is
/// not principal; carries the offending q and its ideal-class description.
class polya_obstruction_error : public std::runtime_error {
 public:
  polya_obstruction_error(BigInt q, std::string info)
      : std::runtime_error("Pi_" + q.str() + " is not principal" +
                           (info.empty() ? "" : ": " + info)),
        q_(std::move(q)),
        info_(std::move(info)) {}
  const BigInt& q() const { return q_; }
  const std::string& info() const { return info_; }

 private:
  BigInt q_;
  std::string info_;
};

/// Levels F_q^(k) of the Fermat polynomial F_q = (X^q - X)/pi_q under
/// self-composition: level 0 = X, level k+1 = F_q composed with level k.
/// Construction verifies the defining relation
///   (F_q^(k))^q - F_q^(k) - pi_q * F_q^(k+1) = 0
/// exactly at every level, recomputing the power by an independent
/// multiplication route.
template <GroundDomain D>
class FermatTower {
 public:
  using Field = typename D::Field;
  using Elem = typename D::Elem;
  using P = Poly<Field>;

  FermatTower(const D& dom, const BigInt& q, int depth,
              bool verify_at_construction = true)
      : q_(q), pi_(dom.field().one()) {
    if (q < BigInt(2) || !prime_power_decompose(q))
      throw std::invalid_argument("FermatTower: q must be a prime power >= 2");
    if (depth < 0) throw std::invalid_argument("FermatTower: depth >= 0");
    auto gen = dom.pi_generator(q);
    if (!gen) throw polya_obstruction_error(q, dom.obstruction_info(q));
    pi_ = *gen;

    Field field = dom.field();
    P x = P::variable(field);
    levels_.push_back(x);
    if (depth == 0) return;

    // F_q = (X^q - X)/pi.
    if (!q.fits_long() || q.to_long() > (1 << 22))
      throw std::overflow_error("FermatTower: q too large");
    long ql = q.to_long();
    Elem inv_pi = field.one() / pi_;
    std::vector<Elem> coeffs(static_cast<size_t>(ql) + 1, field.zero());
    coeffs[1] = field.zero() - inv_pi;
    coeffs.back() = inv_pi;
    P fermat(field, std::move(coeffs));

    for (int k = 1; k <= depth; ++k)
      levels_.push_back(compose(fermat, levels_.back()));
    if (verify_at_construction)
      for (int k = 0; k < depth; ++k) verify_relation(k);
  }

  const BigInt& q() const { return q_; }
  const Elem& pi() const { return pi_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const P& level(int k) const { return levels_.at(static_cast<size_t>(k)); }

  /// Exact check of (level k)^q - level k - pi * level k+1 = 0; the power
  /// runs through binary powering while the stored level came from Horner
  /// composition.
  void verify_relation(int k) const {
    const P& lk = level(k);
    const P& lk1 = level(k + 1);
    P lhs = pow(lk, q_);
    lhs -= lk;
    lhs -= lk1.scaled(pi_);
    if (!lhs.is_zero())
      throw std::logic_error("FermatTower: relation fails at level " +
                             std::to_string(k));
  }

 private:
  BigInt q_;
  Elem pi_;
  std::vector<P> levels_;
};

/// F_{k,n} = prod_i (F_k^(i))^(n_i) over the base-k digits n_i of n.
/// Memoized per tower: F_{k,n} = F_{k, n - k^j} * (level j) with j the
/// lowest nonzero digit position, so each n costs one multiplication.
template <GroundDomain D>
class FknTable {
 public:
  using P = typename FermatTower<D>::P;

  FknTable(const D& dom, const BigInt& k, long max_n)
      : k_(k),
        tower_(dom, k, depth_for(k, max_n)),
        one_(P::constant(dom.field(), dom.field().one())) {}

  /// Adopts an already-built (and possibly deeper) tower.
  FknTable(const D& dom, FermatTower<D> tower)
      : k_(tower.q()),
        tower_(std::move(tower)),
        one_(P::constant(dom.field(), dom.field().one())) {}

  const FermatTower<D>& tower() const { return tower_; }

  /// Degree n, leading coefficient pi_k^(-w_k(n)); both asserted.
  const P& get(long n) {
    if (n < 0) throw std::invalid_argument("FknTable: n >= 0");
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    P value = one_;
    if (n > 0) {
      // Lowest nonzero base-k digit at position j.
      long kl = k_.to_long();
      long power = 1;
      long rest = n;
      int j = 0;
      while (rest % kl == 0) {
        rest /= kl;
        power *= kl;
        ++j;
      }
      value = get(n - power) * tower_.level(j);
    }
    if (value.degree() != n)
      throw std::logic_error("FknTable: degree mismatch");
    verify_leading(value, n);
    return memo_.emplace(n, std::move(value)).first->second;
  }

 private:
  static int depth_for(const BigInt& k, long max_n) {
    int depth = 0;
    BigInt power = k;
    while (power <= BigInt(max_n)) {
      power *= k;
      ++depth;
    }
    return depth;
  }

  void verify_leading(const P& value, long n) const {
    using Elem = typename D::Elem;
    BigInt w = factorial_exponent(k_, BigInt(n));
    Elem expect = one_.leading();
    for (BigInt i(0); i < w; i += BigInt(1)) expect = expect / tower_.pi();
    if (!(value.leading() == expect))
      throw std::logic_error("FknTable: leading coefficient mismatch");
  }

  BigInt k_;
  FermatTower<D> tower_;
  P one_;
  std::map<long, P> memo_;
};

/// One-shot F_{k,n} with degree and leading-coefficient assertions.
template <GroundDomain D>
typename FermatTower<D>::P f_kn(const D& dom, const BigInt& k,
                                const BigInt& n) {
  if (n.sign() < 0 || !n.fits_long())
    throw std::invalid_argument("f_kn: bad n");
  FknTable<D> table(dom, k, n.is_zero() ? 0 : n.to_long());
  return table.get(n.to_long());
}

}  // namespace intpoly

#endif  // INTPOLY_FERMAT_HPP
