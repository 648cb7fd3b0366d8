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

#include "tfab/isotypy.hpp"

namespace tfab {

namespace {

template <typename Keep>
FDGroup filter(const FDGroup& group, Keep keep) {
  std::vector<Summand> kept;
  for (const Summand& s : group.summands()) {
    if (keep(htype_of(s.chi))) kept.push_back(s);
  }
  return FDGroup(std::move(kept));
}

}  // namespace

FDGroup a_of_t(const FDGroup& group, const HType& t) {
  return filter(group, [&](const HType& s) { return htype_leq(t, s); });
}

FDGroup a_star_of_t(const FDGroup& group, const HType& t) {
  return filter(group, [&](const HType& s) { return htype_less(t, s); });
}

Cardinal rank_At(const FDGroup& group, const HType& t) {
  return filter(group, [&](const HType& s) { return s == t; }).total_rank();
}

Cardinal max_independent_of_type(const FDGroup& group, const HType& t) {
  if (realizable_htypes(group).count(t) == 0) return Cardinal(0);
  return a_of_t(group, t).total_rank();
}

TypeRankProfile type_rank_profile(const FDGroup& group) {
  TypeRankProfile out;
  for (const Summand& s : group.summands()) out.exact_ranks[htype_of(s.chi)] += s.multiplicity;
  for (const HType& t : realizable_htypes(group)) {
    out.independent_counts.emplace(t, a_of_t(group, t).total_rank());
  }
  return out;
}

bool separable_isotypic(const FDGroup& a, const FDGroup& b) {
  return type_rank_profile(a).independent_counts == type_rank_profile(b).independent_counts;
}

bool fd_isomorphic(const FDGroup& a, const FDGroup& b) {
  return type_rank_profile(a).exact_ranks == type_rank_profile(b).exact_ranks;
}

}  // namespace tfab
