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

#ifndef INTPOLY_QUAD_IDEAL_HPP
#define INTPOLY_QUAD_IDEAL_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "intpoly/bigint.hpp"
#include "intpoly/quad_elem.hpp"

namespace intpoly {

/// Nonzero integral ideal of the maximal order of an imaginary quadratic
/// field, stored as content * (aZ + ((b + sqrt(disc))/2) Z) with a > 0,
/// content > 0, b^2 = disc (mod 4a), and b canonical in (-a, a].  The
/// content factor is needed so that products such as a split-prime pair
/// multiplying to (p) stay representable.  Norm = content^2 * a.
class QuadIdeal {
 public:
  QuadIdeal(BigInt a, BigInt b, BigInt disc, BigInt content = BigInt(1));
  static QuadIdeal unit_ideal(const BigInt& disc);
  /// n * O_K for a positive rational integer n.
  static QuadIdeal principal_integer(const BigInt& disc, const BigInt& n);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& disc() const { return disc_; }
  const BigInt& content() const { return content_; }

  /// Third coefficient (b^2 - disc) / (4a) of the associated form.
  BigInt form_c() const;
  BigInt norm() const { return content_ * content_ * a_; }
  bool is_unit_ideal() const { return content_.is_one() && a_.is_one(); }

  QuadIdeal primitive_part() const { return {a_, b_, disc_}; }
  QuadIdeal conjugate() const;

  /// Exact module product, computed on Z-bases via Hermite reduction.
  friend QuadIdeal operator*(const QuadIdeal& i, const QuadIdeal& j);

  friend bool operator==(const QuadIdeal& i, const QuadIdeal& j) = default;
  /// Order by (norm, a, b); deterministic across runs.
  friend std::strong_ordering operator<=>(const QuadIdeal& i,
                                          const QuadIdeal& j);

  /// Is x + y*sqrt(d) an element of this ideal?
  bool contains(const QuadElem& e) const;

  /// "(2,2)" for primitive ideals, "(3)" for content * unit ideal,
  /// "2*(3,2)" in general.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadIdeal& v);

 private:
  BigInt content_, a_, b_, disc_;
};

QuadIdeal pow(const QuadIdeal& i, int e);

/// The unique reduced representative of the ideal class of i (content and
/// principal factors are quotiented away).
QuadIdeal reduce(const QuadIdeal& i);

bool is_principal(const QuadIdeal& i);

/// A generating element when the ideal is principal, found by norm
/// enumeration; deterministic first hit.
std::optional<QuadElem> principal_generator_of(const QuadIdeal& i);

/// disc = d for d = 1 mod 4, else 4d; d must be squarefree and negative.
BigInt fundamental_discriminant(const BigInt& d);
bool is_fundamental_discriminant(const BigInt& disc);

enum class SplitType { kSplit, kRamified, kInert };
SplitType splitting_type(const BigInt& disc, const BigInt& p);

/// Prime ideals above the rational prime p: two of norm p (split), one of
/// norm p (ramified), or p*O_K of norm p^2 (inert).
std::vector<QuadIdeal> primes_above(const BigInt& disc, const BigInt& p);

/// Full table of reduced ideal classes with composition, indices sorted by
/// (a, b); index 0 is the identity class.
class ClassGroupTable {
 public:
  explicit ClassGroupTable(const BigInt& disc);

  const BigInt& disc() const { return disc_; }
  int h() const { return static_cast<int>(forms_.size()); }
  const std::vector<QuadIdeal>& reduced_forms() const { return forms_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int identity() const { return 0; }
  int compose(int i, int j) const;
  int inverse(int i) const;
  int class_of(const QuadIdeal& ideal) const;
  int element_order(int i) const;

 private:
  BigInt disc_;
  std::vector<QuadIdeal> forms_;
  std::vector<std::vector<int>> table_;
};

ClassGroupTable class_group(const BigInt& disc);

/// Polya-Ostrowski subgroup of the class group: generated by the classes of
/// the ramified primes, stored as an explicit element set.
struct PogResult {
  BigInt d;
  BigInt disc;
  int h = 0;
  std::vector<int> generators;  // classes of ramified primes
  std::vector<int> subgroup;    // sorted class indices
  int order = 0;
  bool is_trivial = false;
  bool is_proper = false;
  std::vector<int> element_orders;  // per subgroup element
};

PogResult polya_ostrowski_group(const BigInt& d);
PogResult polya_ostrowski_group(const BigInt& d, const ClassGroupTable& table);

}  // namespace intpoly

#endif  // INTPOLY_QUAD_IDEAL_HPP
