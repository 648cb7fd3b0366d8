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

#include <gtest/gtest.h>

#include <random>

#include "tfab/error.hpp"
#include "tfab/padic.hpp"

namespace tfab {
namespace {

Ladder make_ladder(Prime p, std::uint64_t k, std::uint64_t l, std::vector<LadderStep> steps,
                   bool infinite = false) {
  return Ladder{p, k, l, std::move(steps), infinite};
}

Height comb_height(const RealizedPair& r, const Ladder& lad, const Integer& u, const Integer& v) {
  return vector_valuation(combine(u * power(lad.p, lad.l - lad.k), r.a, v, r.b));
}

TEST(Height, MinMixesExactAndBounds) {
  EXPECT_EQ(min(Height::exact(3), Height::at_least(5)), Height::exact(3));
  EXPECT_EQ(min(Height::exact(5), Height::at_least(5)), Height::at_least(5));
  EXPECT_EQ(min(Height::infinite(), Height::exact(2)), Height::exact(2));
  EXPECT_TRUE(Height::at_least(5).exceeds(4));
  EXPECT_FALSE(Height::at_least(5).exceeds(5));
}

TEST(TruncatedPAdic, ValuationAndDigits) {
  TruncatedPAdic x(3, 4, 18);
  EXPECT_EQ(x.valuation(), Height::exact(2));
  EXPECT_EQ(x.digits(), (std::vector<std::uint64_t>{0, 0, 2, 0}));
  EXPECT_EQ(TruncatedPAdic(3, 4, 81).valuation(), Height::at_least(4));
  EXPECT_EQ(TruncatedPAdic(3, 4, -1).residue(), 80);
}

TEST(TruncatedPAdic, MixedOperandsRejected) {
  TruncatedPAdic x(3, 4, 1);
  try {
    (void)(x + TruncatedPAdic(5, 4, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedPrime);
  }
  try {
    (void)(x + TruncatedPAdic(3, 5, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedPrecision);
  }
}

TEST(Ladder, ValidityClauses) {
  EXPECT_TRUE(ladder_violations(make_ladder(3, 0, 0, {{2, 1, 1}, {5, 1, 2}})).empty());
  EXPECT_FALSE(ladder_violations(make_ladder(3, 0, 0, {{2, 1, 1}, {2, 1, 2}})).empty());
  EXPECT_FALSE(ladder_violations(make_ladder(3, 0, 0, {{2, 0, 2}})).empty());
  // (2, 2) is proportional to (1, 1) mod 3.
  EXPECT_FALSE(ladder_violations(make_ladder(3, 0, 0, {{2, 1, 1}, {4, 2, 2}})).empty());
  EXPECT_FALSE(ladder_violations(make_ladder(3, 0, 1, {{1, 1, 1}})).empty());
  EXPECT_FALSE(ladder_violations(make_ladder(4, 0, 0, {{1, 1, 1}})).empty());
}

TEST(Ladder, RealizedExampleHasPlantedHeights) {
  Ladder lad = make_ladder(3, 0, 0, {{2, 1, 1}});
  RealizedPair r = realize_ladder(lad, 8);
  EXPECT_EQ(vector_valuation(r.a), Height::exact(0));
  EXPECT_EQ(vector_valuation(r.b), Height::exact(0));
  EXPECT_EQ(comb_height(r, lad, 1, 1), Height::exact(2));
  EXPECT_EQ(comb_height(r, lad, 2, 1), Height::exact(0));
  EXPECT_EQ(comb_height(r, lad, 1, 2), Height::exact(0));
  EXPECT_EQ(extract_ladder(r.a, r.b, 7), lad);
}

TEST(Ladder, InsufficientPrecision) {
  try {
    realize_ladder(make_ladder(3, 0, 0, {{6, 1, 1}}), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientPrecision);
  }
}

Ladder random_ladder(std::mt19937_64& rng, Prime p, bool infinite) {
  Ladder lad;
  lad.p = p;
  lad.k = rng() % 3;
  lad.l = lad.k + rng() % 3;
  lad.infinite = infinite;
  std::uint64_t t = lad.l;
  std::size_t steps = 1 + rng() % 4;
  for (std::size_t i = 0; i < steps; ++i) {
    t += 1 + rng() % 3;
    for (;;) {
      LadderStep s{t, rng() % p, rng() % p};
      lad.steps.push_back(s);
      if (ladder_violations(lad).empty()) break;
      lad.steps.pop_back();
    }
  }
  return lad;
}

TEST(Ladder, RoundTripThroughCanonicalForm) {
  std::mt19937_64 rng(7);
  for (Prime p : {2, 3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      bool infinite = i % 3 == 0;
      Ladder lad = random_ladder(rng, p, infinite);
      const std::uint64_t n = lad.steps.back().t + 2 + rng() % 4;
      RealizedPair r = realize_ladder(lad, n);
      auto [ca, cb] = accumulated(lad, lad.steps.size());
      for (std::size_t j = 1; j <= lad.steps.size(); ++j) {
        auto [a, b] = accumulated(lad, j);
        Height h = comb_height(r, lad, a, b);
        if (!infinite || j < lad.steps.size()) {
          EXPECT_EQ(h, Height::exact(lad.steps[j - 1].t));
        }
      }
      Ladder canon = canonical_ladder(lad, n);
      Ladder got = extract_ladder(r.a, r.b, n - 1);
      if (infinite) {
        EXPECT_TRUE(ladder_prefix_compatible(got, canon));
        EXPECT_TRUE(got.infinite);
      } else {
        EXPECT_EQ(got, canon) << "p=" << p << " i=" << i;
      }
      // A truncated ladder can lose every step: its first jump lies beyond
      // the precision once alpha_1 is normalized to 1.
      if (canon.steps.empty()) {
        EXPECT_TRUE(infinite);
        continue;
      }
      EXPECT_TRUE(ladder_violations(canon).empty());
      EXPECT_EQ(canon.steps.front().alpha, 1u);
      if (!infinite) EXPECT_EQ(canonical_ladder(canon, n), canon);
    }
  }
}

TEST(Uniqueness, SingleRaisingClassOnRealizedPairs) {
  std::mt19937_64 rng(11);
  for (Prime p : {2, 3, 5}) {
    for (int i = 0; i < 50; ++i) {
      Ladder lad = random_ladder(rng, p, false);
      RealizedPair r = realize_ladder(lad, 24);
      for (std::uint64_t level = lad.l; level < 20; ++level) {
        UniquenessReport rep = check_unique_dependency(r.a, r.b, level);
        EXPECT_TRUE(rep.pass);
        EXPECT_LE(rep.classes, 1u);
      }
    }
  }
}

TEST(MixedGroup, HeightsAndDivision) {
  FDGroup z({Summand{Characteristic::zero(), Cardinal(1)},
             Summand{Characteristic::infinite(), Cardinal(1)}});
  MixedGroup g({PadicBlock{3, 5, 1}}, z);
  MixedElement x;
  x.rational.set({0, 0}, 4);
  x.padic.emplace(CoordKey{0, 0}, TruncatedPAdic(3, 5, 9));
  EXPECT_EQ(mixed_height(g, x, 2), Height::exact(2));
  EXPECT_EQ(mixed_height(g, x, 3), Height::exact(0));
  MixedElement y = divide_by_prime_power(g, x, 2, 2);
  EXPECT_EQ(y.rational.get({0, 0}), 1);
  EXPECT_EQ(scale(4, y).padic.at({0, 0}), x.padic.at({0, 0}));
  try {
    divide_by_prime_power(g, x, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndeterminateAtPrecision);
  }
}

}  // namespace
}  // namespace tfab
