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

#ifndef TFAB_VERIFY_ACCEPTANCE_HPP_
#define TFAB_VERIFY_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tfab::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  // seconds; 0 means unbounded
};

CriterionResult lattice_laws(std::uint64_t seed);
CriterionResult szmielew_invariants(std::uint64_t seed);
CriterionResult tuple_reduction(std::uint64_t seed);
CriterionResult dependency_uniqueness(std::uint64_t seed);
CriterionResult ladder_round_trip(std::uint64_t seed);
CriterionResult infinite_split(std::uint64_t seed);
CriterionResult two_type_round_trip(std::uint64_t seed);
CriterionResult isotypy_decision(std::uint64_t seed);
CriterionResult implication_chain(std::uint64_t seed);
// Needs the results of the other criteria.
CriterionResult text_round_trip(std::uint64_t seed, const std::vector<CriterionResult>& earlier);

// Runs every criterion in order; `report` is called as each one finishes.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& report = {});

std::string format_result(const CriterionResult& r);

}  // namespace tfab::verify

#endif  // TFAB_VERIFY_ACCEPTANCE_HPP_
