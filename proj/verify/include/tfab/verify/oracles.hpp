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

#ifndef TFAB_VERIFY_ORACLES_HPP_
#define TFAB_VERIFY_ORACLES_HPP_

#include <cstdint>
#include <vector>

#include "tfab/groups.hpp"
#include "tfab/padic.hpp"
#include "tfab/verify/generators.hpp"

namespace tfab::verify {

// dim over F_p of p^n A / p^(n+1) A, by brute force over a p-local lattice
// model of A presented through a random unimodular basis change. Needs
// finite multiplicities.
std::uint64_t tf_dimension_oracle(const FDGroup& group, Prime p, std::uint64_t n, Rng& rng);

// Rank over Q by fraction-free (Bareiss) elimination of the cleared
// integer coordinate matrix.
std::size_t bareiss_rank(const std::vector<Element>& elems);

// Largest independent family of elements of exact h-type t among integer
// combinations of the summand generators with coefficients in [-bound, bound].
std::uint64_t exact_type_oracle(const FDGroup& group, const HType& t, std::int64_t bound);

// True when h_p(u c + v d) = min(h_p(u c), h_p(v d)) for all |u|, |v| <= bound.
bool height_independent_oracle(const MixedGroup& group, const MixedElement& c,
                               const MixedElement& d, Prime p, std::int64_t bound);

}  // namespace tfab::verify

#endif  // TFAB_VERIFY_ORACLES_HPP_
