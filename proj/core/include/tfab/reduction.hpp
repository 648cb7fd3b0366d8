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

#ifndef TFAB_REDUCTION_HPP_
#define TFAB_REDUCTION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tfab/groups.hpp"
#include "tfab/numbers.hpp"
#include "tfab/padic.hpp"

namespace tfab {

// Integer coefficients c with sum c_i a_i = 0, gcd 1, first nonzero entry
// positive.
struct DependencyRelation {
  std::vector<Integer> coefficients;

  friend bool operator==(const DependencyRelation&, const DependencyRelation&) = default;
};

using IntegerMatrix = std::vector<std::vector<Integer>>;

// inputs[i] = sum_j expression[i][j] * basis[j].
struct ReductionResult {
  std::vector<Element> basis;
  IntegerMatrix expression;
};

// Rank over Q of the coordinate matrix.
std::size_t rational_rank(const std::vector<Element>& elems);

// Kernel vector for the first free column of the reduced row echelon form.
std::optional<DependencyRelation> find_dependency(const FDGroup& group,
                                                  const std::vector<Element>& elems);

// With rel = (alpha, -beta), i.e. alpha a1 = beta a2 and gcd 1, returns c with
// a1 = beta c and a2 = alpha c.
Element reduce_pair(const FDGroup& group, const Element& a1, const Element& a2,
                    const DependencyRelation& rel);

ReductionResult reduce_tuple(const FDGroup& group, const std::vector<Element>& elems);

// sum_j m[j] * basis[j]
Element apply_row(const std::vector<Integer>& row, const std::vector<Element>& basis);

struct InfiniteSplit {
  MixedElement c;
  MixedElement d;
  Integer gamma;
  Integer delta;
};

// (gamma, delta) with gamma u - delta beta = 1 and gamma the least positive
// choice, where u = alpha p^shift.
std::pair<Integer, Integer> split_coefficients(const Integer& alpha, const Integer& beta,
                                               Prime p, std::uint64_t shift);

// For h_p(a) = k <= l = h_p(b) and h_p(alpha p^(l-k) a + beta b) = inf:
// p^(l-k) c = alpha p^(l-k) a + beta b and d = delta a + gamma b, where
// gamma alpha p^(l-k) - delta beta = 1 with gamma the least positive choice.
InfiniteSplit split_infinite_dependency(const MixedGroup& group, const MixedElement& a,
                                        const MixedElement& b, const Integer& alpha,
                                        const Integer& beta, Prime p);

}  // namespace tfab

#endif  // TFAB_REDUCTION_HPP_
