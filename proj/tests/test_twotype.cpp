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

#include "tfab/error.hpp"
#include "tfab/text.hpp"
#include "tfab/twotype.hpp"
#include "tfab/verify/generators.hpp"

namespace tfab {
namespace {

TEST(ValidateTwoType, LadderClauses) {
  TwoType tt;
  tt.expression = {{1, 0}, {0, 1}};
  tt.locals[3] = LadderLocal{Ladder{3, 0, 0, {{2, 1, 1}, {5, 1, 2}}, false}, false};
  EXPECT_TRUE(validate_two_type(tt));
  tt.locals[3] = LadderLocal{Ladder{3, 0, 0, {{2, 1, 1}, {2, 1, 2}}, false}, false};
  EXPECT_FALSE(validate_two_type(tt));
  tt.locals[3] = LadderLocal{Ladder{3, 0, 0, {{2, 0, 2}}, false}, false};
  EXPECT_FALSE(validate_two_type(tt));
}

TEST(ClassifyPair, RankOneMultiples) {
  FDGroup z({Summand{Characteristic::zero(), Cardinal(1)}});
  MixedElement x;
  x.rational.set({0, 0}, 2);
  MixedElement y;
  y.rational.set({0, 0}, 3);
  TwoType tt = classify_pair(z, x, y);
  EXPECT_EQ(tt.rank, 1);
  EXPECT_EQ(*tt.char_single, Characteristic::zero());
  EXPECT_EQ(tt.expression, (IntegerMatrix{{2}, {3}}));
}

TEST(ClassifyPair, IntegerAndRationalCoordinates) {
  FDGroup g({Summand{Characteristic::zero(), Cardinal(1)},
             Summand{Characteristic::infinite(), Cardinal(1)}});
  MixedElement x;
  x.rational.set({0, 0}, 1);
  MixedElement y;
  y.rational.set({1, 0}, 1);
  TwoType tt = classify_pair(g, x, y);
  EXPECT_EQ(tt.rank, 2);
  EXPECT_TRUE(tt.locals.empty());
  // The witnesses are rebased so that the first one is divisible almost everywhere.
  EXPECT_EQ(tt.default_local, (PrimeLocalType{IndepWithInfinite{ExtHeight::inf(), ExtHeight(0)}}));
  EXPECT_EQ(tt.expression, (IntegerMatrix{{0, -1}, {1, 0}}));
  for (Prime p : {2, 3, 5, 7}) EXPECT_EQ(case_name(tt.at(p)), "indep_infinite");
}

TEST(ClassifyPair, PlantedLadder) {
  Ladder lad{3, 0, 0, {{2, 1, 1}}, false};
  RealizedPair r = realize_ladder(lad, 8);
  MixedGroup g({PadicBlock{3, 8, 2}}, FDGroup());
  MixedElement x;
  MixedElement y;
  for (std::size_t i = 0; i < 2; ++i) {
    x.padic.emplace(CoordKey{0, i}, r.a[i]);
    y.padic.emplace(CoordKey{0, i}, r.b[i]);
  }
  TwoType tt = classify_pair(g, x, y);
  EXPECT_EQ(tt.rank, 2);
  ASSERT_EQ(tt.locals.count(3), 1u);
  EXPECT_EQ(tt.locals.at(3), (PrimeLocalType{LadderLocal{lad, false}}));
}

TEST(RealizeTwoType, RankOne) {
  TwoType tt;
  tt.rank = 1;
  tt.char_single = Characteristic::make(Default::kZero, {{2, ExtHeight(3)}});
  tt.expression = {{1}, {1}};
  Realization r = realize_two_type(tt, 16);
  EXPECT_EQ(r.carrier.rational().size(), 1u);
  EXPECT_EQ(r.x, r.y);
  EXPECT_EQ(classify_pair(r.carrier, r.x, r.y), tt);
}

TEST(RealizeTwoType, MixedCasesRoundTrip) {
  TwoType tt;
  tt.expression = {{1, 0}, {0, 1}};
  tt.locals[3] = LadderLocal{Ladder{3, 0, 0, {{2, 1, 1}, {5, 1, 2}}, false}, false};
  tt.locals[5] = IndepWithInfinite{ExtHeight::inf(), ExtHeight(2)};
  tt = canonicalize(tt, 16);
  Realization r = realize_two_type(tt, 16);
  EXPECT_FALSE(r.carrier.blocks().empty());
  EXPECT_EQ(classify_pair(r.carrier, r.x, r.y), tt);
}

TEST(RealizeTwoType, RandomRoundTrip) {
  verify::Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    TwoType tt = verify::random_two_type(rng, 3, 16, 24);
    ASSERT_TRUE(validate_two_type(tt)) << two_type_to_json(tt);
    Realization r = realize_two_type(tt, 24);
    TwoType back = classify_pair(r.carrier, r.x, r.y);
    EXPECT_TRUE(same_up_to_precision(back, tt)) << two_type_to_json(tt) << "\n" << two_type_to_json(back);
  }
}

TEST(RealizeTwoType, ExpressionOnlyChangesExpression) {
  verify::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    TwoType tt = verify::random_two_type(rng, 3, 12, 20);
    if (tt.rank != 2) continue;
    TwoType shear = tt;
    shear.expression = {{1, 0}, {1, 1}};
    Realization r = realize_two_type(shear, 20);
    EXPECT_EQ(r.y, combine(1, r.a, 1, r.b));
    EXPECT_EQ(classify_witnesses(r.carrier, r.a, r.b, shear.expression), shear);
  }
}

TEST(RealizeTwoType, InvalidRejected) {
  TwoType tt;
  tt.expression = {{1, 0}, {0, 1}};
  tt.locals[3] = IndepWithInfinite{ExtHeight(1), ExtHeight(2)};
  try {
    realize_two_type(tt, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidTwoType);
  }
}

TEST(TwoTypeJson, RoundTrip) {
  verify::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    TwoType tt = verify::random_two_type(rng, 3, 16, 24);
    EXPECT_EQ(two_type_from_json(two_type_to_json(tt)), tt);
  }
}

}  // namespace
}  // namespace tfab
