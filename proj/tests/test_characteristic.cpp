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

#include "tfab/characteristic.hpp"
#include "tfab/error.hpp"
#include "tfab/text.hpp"
#include "tfab/verify/generators.hpp"

namespace tfab {
namespace {

Characteristic ch(const char* text) { return parse_characteristic(text); }
HType ht(const char* text) { return parse_htype(text); }

TEST(Characteristic, Meet) {
  EXPECT_EQ(char_meet(ch("(0;)"), ch("(inf;)")), ch("(0;)"));
  EXPECT_EQ(char_meet(ch("(0; 2:inf, 3:4)"), ch("(0; 3:1, 5:2)")), ch("(0; 3:1)"));
  EXPECT_EQ(char_meet(ch("(inf; 2:0)"), ch("(inf; 3:0)")), ch("(inf; 2:0, 3:0)"));
}

TEST(Characteristic, Join) {
  EXPECT_EQ(char_join(ch("(0;)"), ch("(inf;)")), ch("(inf;)"));
  EXPECT_EQ(char_join(ch("(0; 2:3)"), ch("(0; 2:5)")), ch("(0; 2:5)"));
  EXPECT_EQ(char_join(ch("(inf; 3:1)"), ch("(0; 3:2)")), ch("(inf; 3:2)"));
}

TEST(Characteristic, OrderAndEquivalence) {
  EXPECT_TRUE(char_leq(ch("(0;)"), ch("(0; 7:1)")));
  EXPECT_FALSE(char_leq(ch("(0; 2:3)"), ch("(0; 2:2)")));
  EXPECT_FALSE(char_leq(ch("(inf;)"), ch("(inf; 2:7)")));
  EXPECT_TRUE(char_equiv(ch("(0; 2:5)"), ch("(0;)")));
  EXPECT_FALSE(char_equiv(ch("(0; 2:inf)"), ch("(0;)")));
  EXPECT_FALSE(char_equiv(ch("(0;)"), ch("(inf;)")));
}

TEST(Characteristic, NormalizedDropsDefaults) {
  Characteristic c = Characteristic::normalized(Default::kZero, {{2, ExtHeight(0)}, {3, 4}});
  EXPECT_EQ(c.exceptions().size(), 1u);
  EXPECT_EQ(c.at(3), ExtHeight(4));
  EXPECT_EQ(c.at(101), ExtHeight(0));
}

TEST(HType, OfCharacteristic) {
  EXPECT_EQ(htype_of(ch("(0; 2:7, 3:inf)")), HType(Default::kZero, {3}));
  EXPECT_EQ(htype_of(ch("(inf; 5:0)")), HType(Default::kInf, {5}));
  EXPECT_EQ(htype_of(ch("(0;)")), HType(Default::kZero, {}));
}

TEST(HType, Lattice) {
  EXPECT_EQ(htype_meet(ht("[0;]"), ht("[inf; 2]")), ht("[0;]"));
  EXPECT_EQ(htype_meet(ht("[0; 2]"), ht("[0; 3]")), ht("[0;]"));
  EXPECT_TRUE(htype_leq(ht("[0; 2]"), ht("[inf;]")));
  EXPECT_FALSE(htype_leq(ht("[inf;]"), ht("[0; 2]")));
  EXPECT_EQ(htype_join(ht("[inf; 2]"), ht("[0; 3]")), ht("[inf; 2]"));
  EXPECT_TRUE(htype_less(ht("[0;]"), ht("[0; 2]")));
  EXPECT_FALSE(htype_less(ht("[0; 2]"), ht("[0; 2]")));
}

TEST(HType, RepresentativeHasTheType) {
  verify::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    HType t = verify::random_htype(rng);
    EXPECT_EQ(htype_of(t.representative()), t);
  }
}

TEST(Shift, MultiplyAndDivide) {
  EXPECT_EQ(char_shift(ch("(0;)"), 2, 3), ch("(0; 2:3)"));
  EXPECT_EQ(char_shift(ch("(0; 2:3)"), 2, -3), ch("(0;)"));
  try {
    char_shift(ch("(0;)"), 2, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShiftBelowZero);
  }
  try {
    char_shift(ch("(0; 2:inf)"), 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShiftAtInfinity);
  }
  EXPECT_EQ(char_shift(ch("(0; 2:inf)"), 2, 0), ch("(0; 2:inf)"));
}

TEST(Properties, LatticeLawsAndTypeHomomorphism) {
  verify::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Characteristic x = verify::random_characteristic(rng);
    Characteristic y = verify::random_characteristic(rng);
    Characteristic z = verify::random_characteristic(rng);
    EXPECT_EQ(char_meet(x, char_join(y, z)), char_join(char_meet(x, y), char_meet(x, z)));
    EXPECT_EQ(char_join(x, char_meet(x, y)), x);
    EXPECT_EQ(char_leq(x, y), char_meet(x, y) == x);
    EXPECT_EQ(htype_of(char_meet(x, y)), htype_meet(htype_of(x), htype_of(y)));
    EXPECT_EQ(htype_of(char_join(x, y)), htype_join(htype_of(x), htype_of(y)));
    EXPECT_EQ(char_equiv(x, y), char_equiv(y, x));
    if (char_leq(x, y)) EXPECT_TRUE(htype_leq(htype_of(x), htype_of(y)));
  }
}

}  // namespace
}  // namespace tfab
