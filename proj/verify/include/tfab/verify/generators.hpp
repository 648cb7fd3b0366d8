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

#ifndef TFAB_VERIFY_GENERATORS_HPP_
#define TFAB_VERIFY_GENERATORS_HPP_

#include <random>
#include <vector>

#include "tfab/characteristic.hpp"
#include "tfab/groups.hpp"
#include "tfab/padic.hpp"
#include "tfab/twotype.hpp"

namespace tfab::verify {

using Rng = std::mt19937_64;

// Primes used by the generators.
const std::vector<Prime>& small_primes();

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

Characteristic random_characteristic(Rng& rng, std::size_t max_exceptions = 4,
                                     std::uint64_t max_height = 5);
HType random_htype(Rng& rng, std::size_t max_flips = 3);

struct GroupShape {
  std::size_t max_types = 4;     // distinct summand characteristics
  std::uint64_t max_rank = 5;    // per summand
  std::uint64_t max_total = 0;   // 0 for no bound
  double omega_chance = 0.0;
};

FDGroup random_fdgroup(Rng& rng, const GroupShape& shape);

// An element with small integer and p-power-denominator coordinates.
Element random_element(Rng& rng, const FDGroup& group, std::int64_t bound);

// Valid ladder with up to max_steps steps and t <= max_t.
Ladder random_ladder(Rng& rng, Prime p, std::size_t max_steps, std::uint64_t max_t,
                     bool infinite);

// Valid canonical TwoType with up to max_primes exceptional primes, ladders
// at most max_t high, canonical at the given precision.
TwoType random_two_type(Rng& rng, std::size_t max_primes, std::uint64_t max_t,
                        std::uint64_t precision);

}  // namespace tfab::verify

#endif  // TFAB_VERIFY_GENERATORS_HPP_
