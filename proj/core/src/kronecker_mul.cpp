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

#include "intpoly/kronecker_mul.hpp"

#include <algorithm>
#include <cstring>

namespace intpoly::detail {

namespace {

constexpr size_t kSchoolbookLimit = 1024;  // product size n1*n2 below this

std::vector<BigInt> convolve_schoolbook(const std::vector<BigInt>& a,
                                        const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      mpz_addmul(c[i + j].raw(), a[i].raw(), b[j].raw());
    }
  }
  return c;
}

// Packs nonnegative values into consecutive slots of `words` 64-bit words.
void pack(const std::vector<BigInt>& v, size_t words, mpz_ptr out) {
  std::vector<uint64_t> buf(v.size() * words, 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    size_t count = 0;
    mpz_export(buf.data() + i * words, &count, -1, sizeof(uint64_t), 0, 0,
               v[i].raw());
  }
  mpz_import(out, buf.size(), -1, sizeof(uint64_t), 0, 0, buf.data());
}

// Splits the packed product back into nonnegative per-slot values.
std::vector<BigInt> unpack(mpz_srcptr prod, size_t slots, size_t words) {
  std::vector<uint64_t> buf(slots * words, 0);
  size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(uint64_t), 0, 0, prod);
  std::vector<BigInt> out(slots);
  for (size_t i = 0; i < slots; ++i) {
    mpz_import(out[i].raw(), words, -1, sizeof(uint64_t), 0, 0,
               buf.data() + i * words);
  }
  return out;
}

size_t max_bits(const std::vector<BigInt>& v) {
  size_t m = 1;
  for (const auto& x : v)
    if (!x.is_zero()) m = std::max(m, x.bit_length());
  return m;
}

}  // namespace

std::vector<BigInt> convolve(const std::vector<BigInt>& a,
                             const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() * b.size() <= kSchoolbookLimit)
    return convolve_schoolbook(a, b);

  size_t nmin = std::min(a.size(), b.size());
  size_t slot_bits = max_bits(a) + max_bits(b) + 2;
  for (size_t t = nmin; t > 0; t >>= 1) ++slot_bits;
  size_t words = (slot_bits + 63) / 64;

  auto split = [](const std::vector<BigInt>& v) {
    std::vector<BigInt> pos(v.size(), BigInt(0)), neg(v.size(), BigInt(0));
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].sign() >= 0)
        pos[i] = v[i];
      else
        neg[i] = -v[i];
    }
    return std::make_pair(std::move(pos), std::move(neg));
  };
  auto [ap, an] = split(a);
  auto [bp, bn] = split(b);

  BigInt pap, pan, pbp, pbn;
  pack(ap, words, pap.raw());
  pack(an, words, pan.raw());
  pack(bp, words, pbp.raw());
  pack(bn, words, pbn.raw());

  // Same-sign and cross-sign contributions stay nonnegative slotwise.
  BigInt same, cross;
  mpz_mul(same.raw(), pap.raw(), pbp.raw());
  mpz_addmul(same.raw(), pan.raw(), pbn.raw());
  mpz_mul(cross.raw(), pap.raw(), pbn.raw());
  mpz_addmul(cross.raw(), pan.raw(), pbp.raw());

  size_t slots = a.size() + b.size() - 1;
  std::vector<BigInt> cs = unpack(same.raw(), slots, words);
  std::vector<BigInt> cc = unpack(cross.raw(), slots, words);
  std::vector<BigInt> out(slots);
  for (size_t i = 0; i < slots; ++i) out[i] = cs[i] - cc[i];
  return out;
}

std::vector<Rational> mul_rational_dense(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  auto clear_denominators = [](const std::vector<Rational>& v,
                               BigInt& common) {
    common = BigInt(1);
    for (const auto& r : v) common = lcm(common, r.den());
    std::vector<BigInt> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i)
      ints[i] = v[i].num() * divexact(common, v[i].den());
    return ints;
  };
  BigInt da, db;
  std::vector<BigInt> ia = clear_denominators(a, da);
  std::vector<BigInt> ib = clear_denominators(b, db);
  std::vector<BigInt> ic = convolve(ia, ib);
  BigInt den = da * db;
  std::vector<Rational> out;
  out.reserve(ic.size());
  for (auto& n : ic) out.emplace_back(n, den);
  return out;
}

}  // namespace intpoly::detail
