//  Copyright 2026 The tfab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef TFAB_GROUPS_HPP_
#define TFAB_GROUPS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tfab/characteristic.hpp"
#include "tfab/numbers.hpp"

namespace tfab {

// The subgroup of Q generated by p^-k for k <= chi(p); it contains 1 and the
// p-height of 1 in it is chi(p).
struct RationalGroup {
  Characteristic chi;
};

bool member(const Rational& x, const RationalGroup& group);

// Height of the nonzero member x at p.
ExtHeight height_rank1(const RationalGroup& group, const Rational& x, Prime p);

// Characteristic of the nonzero member x: chi shifted by the valuations of x.
Characteristic char_rank1(const RationalGroup& group, const Rational& x);

struct Summand {
  Characteristic chi;
  Cardinal multiplicity{1};

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// A fully decomposable group: the direct sum over summands of
/// multiplicity copies of RationalGroup(chi).
class FDGroup {
 public:
  FDGroup() = default;
  explicit FDGroup(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  bool empty() const { return summands_.empty(); }

  Cardinal total_rank() const;

  // Concatenation of the summand lists.
  friend FDGroup direct_sum(const FDGroup& a, const FDGroup& b);

  friend bool operator==(const FDGroup&, const FDGroup&) = default;

 private:
  std::vector<Summand> summands_;
};

struct CoordKey {
  std::size_t summand = 0;
  std::uint64_t copy = 0;

  friend auto operator<=>(const CoordKey&, const CoordKey&) = default;
};

/// A finitely supported element; zero coordinates are never stored.
class Element {
 public:
  Element() = default;

  void set(CoordKey key, const Rational& value);
  Rational get(CoordKey key) const;

  const std::map<CoordKey, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<CoordKey, Rational> coords_;
};

// Throws Error(kMembershipViolation) or Error(kOutOfRange) when a coordinate
// does not belong to its summand.
void validate_element(const FDGroup& group, const Element& a);
bool is_member(const FDGroup& group, const Element& a);

ExtHeight elem_height(const FDGroup& group, const Element& a, Prime p);
Characteristic elem_char(const FDGroup& group, const Element& a);
HType elem_htype(const FDGroup& group, const Element& a);

// Szmielew data of a torsion-free group: D, U and Exp take their constant
// torsion-free values, only Tf varies.
struct SzmielewProfile {
  static constexpr std::uint64_t kD = 0;
  static constexpr std::uint64_t kU = 0;
  static constexpr bool kExpInfinite = true;

  Cardinal tf_default;
  std::map<Prime, Cardinal> tf_exceptions;  // minimal: no value equals the default

  Cardinal tf(Prime p) const;

  friend bool operator==(const SzmielewProfile&, const SzmielewProfile&) = default;
};

Cardinal tf_invariant(const FDGroup& group, Prime p);
SzmielewProfile szmielew_profile(const FDGroup& group);
bool elementarily_equivalent(const FDGroup& a, const FDGroup& b);

// h-types of the nonzero elements: the meet closure of the summand h-types.
std::set<HType> realizable_htypes(const FDGroup& group);
bool iso1_equivalent(const FDGroup& a, const FDGroup& b);

}  // namespace tfab

#endif  // TFAB_GROUPS_HPP_
