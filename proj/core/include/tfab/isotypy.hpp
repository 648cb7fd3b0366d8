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

#ifndef TFAB_ISOTYPY_HPP_
#define TFAB_ISOTYPY_HPP_

#include <map>

#include "tfab/characteristic.hpp"
#include "tfab/groups.hpp"

namespace tfab {

// Summands of h-type >= t.
FDGroup a_of_t(const FDGroup& group, const HType& t);
// Summands of h-type > t.
FDGroup a_star_of_t(const FDGroup& group, const HType& t);

// Rank of A(t) / A*(t): total multiplicity of summands of h-type exactly t.
Cardinal rank_At(const FDGroup& group, const HType& t);

// Largest number of independent elements of exact h-type t: the rank of A(t)
// when t is a meet of summand h-types, 0 otherwise.
Cardinal max_independent_of_type(const FDGroup& group, const HType& t);

struct TypeRankProfile {
  std::map<HType, Cardinal> exact_ranks;         // summand h-types only
  std::map<HType, Cardinal> independent_counts;  // the meet closure

  friend bool operator==(const TypeRankProfile&, const TypeRankProfile&) = default;
};

TypeRankProfile type_rank_profile(const FDGroup& group);

bool separable_isotypic(const FDGroup& a, const FDGroup& b);
bool fd_isomorphic(const FDGroup& a, const FDGroup& b);

}  // namespace tfab

#endif  // TFAB_ISOTYPY_HPP_
