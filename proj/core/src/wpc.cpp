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

#include "intpoly/wpc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "intpoly/membership.hpp"

namespace intpoly {

namespace {

using Vec = std::vector<long>;

long mod_p(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return mod_p(t, p);
}

/// Row-echelon basis of a subspace of F_p^n.
class FpSpace {
 public:
  FpSpace(long p, int n) : p_(p), n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  Vec reduce(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      long c = v[static_cast<size_t>(pivots_[i])];
      if (c == 0) continue;
      for (int j = 0; j < n_; ++j)
        v[static_cast<size_t>(j)] = mod_p(
            v[static_cast<size_t>(j)] - c * rows_[i][static_cast<size_t>(j)],
            p_);
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
  }

  /// Inserts v if independent; returns true when the rank grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < n_; ++j) {
      if (v[static_cast<size_t>(j)] != 0) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return false;
    long inv = inv_mod(v[static_cast<size_t>(piv)], p_);
    for (auto& x : v) x = mod_p(x * inv, p_);
    // Keep earlier rows reduced against the new pivot.
    for (size_t i = 0; i < rows_.size(); ++i) {
      long c = rows_[i][static_cast<size_t>(piv)];
      if (c == 0) continue;
      for (int j = 0; j < n_; ++j)
        rows_[i][static_cast<size_t>(j)] =
            mod_p(rows_[i][static_cast<size_t>(j)] -
                      c * v[static_cast<size_t>(j)],
                  p_);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
  }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  long p_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// The finite F_p-algebra A/pA with canonical coset representatives.
class QuotientModP {
 public:
  QuotientModP(const FiniteAlgebra& algebra, long p)
      : p_(p), r_(algebra.rank()), lattice_(p, algebra.rank()) {
    size_t r = static_cast<size_t>(r_);
    tensor_.assign(r * r * r, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j)
        for (int k = 0; k < r_; ++k)
          tensor_[(static_cast<size_t>(i) * r + static_cast<size_t>(j)) * r +
                  static_cast<size_t>(k)] =
              fdiv_r(algebra.c(i, j, k), BigInt(p)).to_long();
    for (const auto& row : algebra.relations()) {
      Vec v(r);
      for (size_t j = 0; j < r; ++j)
        v[j] = fdiv_r(row[j], BigInt(p)).to_long();
      lattice_.insert(std::move(v));
    }
    unity_.assign(r, 0);
    for (size_t j = 0; j < r; ++j)
      unity_[j] = fdiv_r(algebra.unity()[j], BigInt(p)).to_long();
    unity_ = lattice_.reduce(std::move(unity_));
    for (int j = 0; j < r_; ++j) {
      bool pivot = std::find(lattice_.pivots().begin(),
                             lattice_.pivots().end(),
                             j) != lattice_.pivots().end();
      if (!pivot) free_coords_.push_back(j);
    }
  }

  long p() const { return p_; }
  int ambient_dim() const { return r_; }
  int dim() const { return static_cast<int>(free_coords_.size()); }
  const Vec& unity() const { return unity_; }
  const FpSpace& lattice() const { return lattice_; }

  long count() const {
    long n = 1;
    for (size_t i = 0; i < free_coords_.size(); ++i) {
      if (n > kWpcBudget) break;
      n *= p_;
    }
    return n;
  }

  Vec reduce(Vec v) const { return lattice_.reduce(std::move(v)); }

  bool is_zero(const Vec& v) const {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  }

  Vec mul(const Vec& a, const Vec& b) const {
    size_t r = static_cast<size_t>(r_);
    Vec out(r, 0);
    for (size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < r; ++j) {
        if (b[j] == 0) continue;
        long ab = mod_p(a[i] * b[j], p_);
        if (ab == 0) continue;
        for (size_t k = 0; k < r; ++k) {
          long c = tensor_[(i * r + j) * r + k];
          if (c != 0) out[k] = mod_p(out[k] + ab * c, p_);
        }
      }
    }
    return reduce(std::move(out));
  }

  Vec pow(Vec a, long e) const {
    Vec acc;
    bool have = false;
    a = reduce(std::move(a));
    while (e > 0) {
      if (e & 1) {
        acc = have ? mul(acc, a) : a;
        have = true;
      }
      e >>= 1;
      if (e > 0) a = mul(a, a);
    }
    return acc;
  }

  /// All canonical representatives, counting over the free coordinates.
  std::vector<Vec> elements() const {
    if (count() > kWpcBudget)
      throw budget_error("A/pA enumeration exceeds the residue budget");
    std::vector<Vec> out;
    Vec v(static_cast<size_t>(r_), 0);
    std::vector<long> digits(free_coords_.size(), 0);
    while (true) {
      out.push_back(v);
      size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (++digits[i] < p_) break;
        digits[i] = 0;
      }
      for (size_t j = 0; j < digits.size(); ++j)
        v[static_cast<size_t>(free_coords_[j])] = digits[j];
      if (i == digits.size()) break;
    }
    return out;
  }

  bool is_nilpotent(const Vec& a) const {
    Vec x = reduce(a);
    // x nilpotent iff x^(2^m) = 0 once 2^m >= |A/pA|.
    long n = count();
    for (long m = 1; ; m *= 2) {
      if (is_zero(x)) return true;
      if (m >= n) return false;
      x = mul(x, x);
    }
  }

 private:
  long p_;
  int r_;
  std::vector<long> tensor_;
  FpSpace lattice_;
  Vec unity_;
  std::vector<int> free_coords_;
};

// Primitive idempotents (atoms under e <= f iff ef = e) of the algebra
// presented by quotienting with `space`.
std::vector<Vec> primitive_idempotents(const QuotientModP& q,
                                       const FpSpace& space,
                                       const std::vector<Vec>& ambient_elems) {
  auto red = [&](Vec v) { return space.reduce(std::move(v)); };
  auto mul = [&](const Vec& a, const Vec& b) { return red(q.mul(a, b)); };
  std::vector<Vec> idem;
  for (const auto& e : ambient_elems) {
    Vec er = red(e);
    if (q.is_zero(er)) continue;
    if (mul(er, er) == er &&
        std::find(idem.begin(), idem.end(), er) == idem.end())
      idem.push_back(er);
  }
  if (idem.size() > 4096)
    throw budget_error("idempotent enumeration exceeds budget");
  std::vector<Vec> atoms;
  for (const auto& e : idem) {
    bool minimal = true;
    for (const auto& f : idem) {
      if (f == e) continue;
      if (mul(f, e) == f) {  // f < e strictly
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(e);
  }
  return atoms;
}

// Dimension of the ideal x*Q generated inside the quotient by `space`.
int factor_dimension(const QuotientModP& q, const FpSpace& space,
                     const Vec& e, const std::vector<Vec>& ambient_elems) {
  FpSpace span(q.p(), q.ambient_dim());
  for (const auto& x : ambient_elems) span.insert(space.reduce(q.mul(x, e)));
  return span.rank();
}

}  // namespace

WpcReport check_wpc_over_Z(const FiniteAlgebra& algebra) {
  WpcReport report;
  report.overall = true;
  for (const auto& [p, e] : factor(algebra.order())) {
    if (!p.fits_long())
      throw budget_error("check_wpc_over_Z: prime too large");
    long pl = p.to_long();
    QuotientModP q(algebra, pl);
    PrimeVerdict verdict;
    verdict.p = p;
    verdict.cond1 = true;
    verdict.cond2 = true;

    for (const auto& b : q.elements()) {
      // (2): Frobenius identity on A/pA, computed mod p throughout.
      if (q.pow(b, pl) != b) {
        verdict.cond2 = false;
        if (!verdict.witness) {
          IntVec w;
          for (long x : b) w.emplace_back(x);
          verdict.witness = std::move(w);
        }
      }
      // (1): a^N(p) = a (mod pA) lifted to A with full lattice arithmetic.
      IntVec a;
      for (long x : b) a.emplace_back(x);
      IntVec apow = algebra.pow_elem(a, p);
      Vec diff(static_cast<size_t>(algebra.rank()));
      for (size_t i = 0; i < diff.size(); ++i)
        diff[i] = fdiv_r(apow[i] - a[i], p).to_long();
      if (!q.is_zero(q.reduce(std::move(diff)))) {
        verdict.cond1 = false;
        if (!verdict.witness) {
          IntVec w;
          for (long x : b) w.emplace_back(x);
          verdict.witness = std::move(w);
        }
      }
    }
    if (verdict.cond1 != verdict.cond2)
      throw std::logic_error(
          "check_wpc_over_Z: conditions (1) and (2) disagree");
    report.overall = report.overall && verdict.cond1;
    report.primes.push_back(std::move(verdict));
  }
  return report;
}

ConditionSuite check_condition_suite(const FiniteAlgebra& algebra,
                                     const BigInt& p) {
  if (!is_prime(p) || !p.fits_long())
    throw std::invalid_argument("check_condition_suite: bad prime");
  long pl = p.to_long();
  QuotientModP q(algebra, pl);
  ConditionSuite suite;
  suite.p = p;

  std::vector<Vec> elems = q.elements();

  // (2) Frobenius identity.
  suite.frobenius_identity = true;
  for (const auto& b : elems) {
    if (q.pow(b, pl) != b) {
      suite.frobenius_identity = false;
      if (!suite.witness) {
        IntVec w;
        for (long x : b) w.emplace_back(x);
        suite.witness = std::move(w);
      }
      break;
    }
  }

  // Nilradical and reducedness.
  bool reduced = true;
  FpSpace nilradical(pl, q.ambient_dim());
  for (const auto& row : q.lattice().rows()) nilradical.insert(row);
  for (const auto& b : elems) {
    if (q.is_zero(b)) continue;
    if (q.is_nilpotent(b)) {
      reduced = false;
      nilradical.insert(b);
    }
  }

  // (4) reduced + all residue fields of size p.  The residue fields are the
  // factors of (A/pA)/nilradical cut out by its primitive idempotents.
  std::vector<Vec> red_atoms = primitive_idempotents(q, nilradical, elems);
  bool residues_prime = true;
  for (const auto& e : red_atoms)
    residues_prime =
        residues_prime && factor_dimension(q, nilradical, e, elems) == 1;
  suite.reduced_prime_residue_fields = reduced && residues_prime;

  // (5) embedding into F_p^Y: every primitive-idempotent factor of A/pA
  // itself must be F_p (local factors must already be fields of size p).
  std::vector<Vec> atoms = primitive_idempotents(q, q.lattice(), elems);
  bool embeds = true;
  int total_dim = 0;
  for (const auto& e : atoms) {
    int dim = factor_dimension(q, q.lattice(), e, elems);
    total_dim += dim;
    embeds = embeds && dim == 1;
  }
  embeds = embeds && total_dim == q.dim();
  if (q.dim() == 0) embeds = true;  // zero ring embeds vacuously
  suite.embeds_in_fp_power = embeds;

  // (8) pA = product of the distinct maximal ideals with prime residue
  // fields.  Maximal ideals are the kernels of the projections onto the
  // reduced factors; their product must vanish in A/pA.
  bool cond8 = residues_prime;
  FpSpace product(pl, q.ambient_dim());
  bool product_initialized = false;
  for (const auto& e : red_atoms) {
    // M_e = { x : x*e = 0 in (A/pA)/nil }.
    FpSpace m(pl, q.ambient_dim());
    for (const auto& row : q.lattice().rows()) m.insert(row);
    for (const auto& x : elems) {
      if (q.is_zero(nilradical.reduce(q.mul(x, e)))) m.insert(x);
    }
    if (!product_initialized) {
      product = m;
      product_initialized = true;
    } else {
      FpSpace next(pl, q.ambient_dim());
      for (const auto& row : q.lattice().rows()) next.insert(row);
      for (const auto& x : product.rows())
        for (const auto& y : m.rows()) next.insert(q.mul(x, y));
      product = next;
    }
  }
  if (product_initialized) {
    // Product reduces to the lattice iff it is zero in A/pA.
    for (const auto& row : product.rows())
      cond8 = cond8 && q.lattice().contains(row);
  } else {
    cond8 = cond8 && q.dim() == 0;  // no maximal ideals: only the zero ring
  }
  suite.maximal_ideal_factorization = cond8;

  suite.all_agree =
      suite.frobenius_identity == suite.reduced_prime_residue_fields &&
      suite.frobenius_identity == suite.embeds_in_fp_power &&
      suite.frobenius_identity == suite.maximal_ideal_factorization;
  return suite;
}

}  // namespace intpoly
