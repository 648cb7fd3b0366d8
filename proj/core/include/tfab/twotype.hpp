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

#ifndef TFAB_TWOTYPE_HPP_
#define TFAB_TWOTYPE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tfab/characteristic.hpp"
#include "tfab/padic.hpp"
#include "tfab/reduction.hpp"

namespace tfab {

// At least one witness has infinite p-height; the other height is recorded.
struct IndepWithInfinite {
  ExtHeight a;
  ExtHeight b;

  friend bool operator==(const IndepWithInfinite&, const IndepWithInfinite&) = default;
};

// Finite heights and no combination raises them.
struct IndepFinite {
  std::uint64_t k = 0;  // h_p(a)
  std::uint64_t l = 0;  // h_p(b)

  friend bool operator==(const IndepFinite&, const IndepFinite&) = default;
};

// alpha p^(l-k) low + beta high has infinite height, where (low, high) is
// (a, b), or (b, a) when swapped.
struct SplitInfinite {
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  Integer alpha;
  Integer beta;
  bool swapped = false;

  friend bool operator==(const SplitInfinite&, const SplitInfinite&) = default;
};

// Ladder of (low, high); ladder.infinite separates the two ladder cases.
struct LadderLocal {
  Ladder ladder;
  bool swapped = false;

  friend bool operator==(const LadderLocal&, const LadderLocal&) = default;
};

using PrimeLocalType = std::variant<IndepWithInfinite, IndepFinite, SplitInfinite, LadderLocal>;

// "indep_infinite", "indep_finite", "split_infinite", "finite_ladder" or
// "infinite_ladder".
std::string case_name(const PrimeLocalType& t);

struct TwoType {
  int rank = 2;
  std::optional<Characteristic> char_single;  // rank 1 only
  std::map<Prime, PrimeLocalType> locals;     // rank 2 only
  PrimeLocalType default_local = IndepFinite{};
  IntegerMatrix expression;  // 2 x rank; (x, y) in terms of the witnesses

  PrimeLocalType at(Prime p) const;

  friend bool operator==(const TwoType&, const TwoType&) = default;
};

// Equality, except that truncated ladders only need to be prefix compatible.
bool same_up_to_precision(const TwoType& x, const TwoType& y);

std::vector<std::string> two_type_violations(const TwoType& tt);
bool validate_two_type(const TwoType& tt);

// Drops entries equal to the default, replaces ladders by canonical_ladder
// and puts split data with k = l in unswapped form.
TwoType canonicalize(const TwoType& tt, std::uint64_t precision);

TwoType classify_pair(const MixedGroup& carrier, const MixedElement& x, const MixedElement& y);

// Local data of an independent witness pair (a, b) with (x, y) = expression
// applied to (a, b). No rebasing: the witnesses are taken as given.
TwoType classify_witnesses(const MixedGroup& carrier, const MixedElement& a,
                           const MixedElement& b, const IntegerMatrix& expression);

// Local classification of an independent pair at one prime.
PrimeLocalType classify_at(const MixedGroup& carrier, const MixedElement& a,
                           const MixedElement& b, Prime p);

struct Realization {
  MixedGroup carrier;
  MixedElement x;
  MixedElement y;
  MixedElement a;  // witnesses
  MixedElement b;
};

Realization realize_two_type(const TwoType& tt, std::uint64_t precision);

}  // namespace tfab

#endif  // TFAB_TWOTYPE_HPP_
