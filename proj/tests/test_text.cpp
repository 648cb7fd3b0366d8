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
#include "tfab/verify/generators.hpp"

namespace tfab {
namespace {

ErrorCode parse_error(const std::string& text) {
  Workspace ws;
  try {
    parse_group_file(text, ws);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOutOfRange;
}

TEST(GroupFile, Summands) {
  Workspace ws;
  parse_group_file("# two copies of Z\ngroup A\nsummand (0;) rank=2\n", ws);
  const FDGroup& a = ws.group("A").rational();
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.summands()[0].chi, Characteristic::zero());
  EXPECT_EQ(a.summands()[0].multiplicity, Cardinal(2));

  parse_group_file("group B\nsummand (0; 2:inf) rank=omega\npadic 3 precision=8 copies=2\n", ws);
  const MixedGroup& b = ws.group("B");
  EXPECT_EQ(b.rational().summands()[0].multiplicity, Cardinal::omega());
  EXPECT_EQ(b.rational().summands()[0].chi.at(2), ExtHeight::inf());
  EXPECT_EQ(b.blocks().at(0), (PadicBlock{3, 8, 2}));
  EXPECT_EQ(ws.group_order, (std::vector<std::string>{"A", "B"}));
}

TEST(GroupFile, Errors) {
  EXPECT_EQ(parse_error("group A\nsummand (0; 2:0) rank=1\n"), ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error("group A\nsummand (0; 4:1) rank=1\n"), ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error("group A\nsummand (0;) rank=0\n"), ErrorCode::kSemanticError);
  EXPECT_EQ(parse_error("group A\nsummand (0; rank=1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("summand (0;) rank=1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_error("group A\ngroup A\n"), ErrorCode::kSemanticError);
  try {
    Workspace ws;
    parse_group_file("group A\nsummand (0; 2:x) rank=1\n", ws);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2, column"), std::string::npos) << e.what();
  }
}

TEST(ElementFile, CoordinatesAndMembership) {
  Workspace ws;
  parse_group_file("group A\nsummand (0; 2:3) rank=1\nsummand (0;) rank=1\npadic 5 precision=4 copies=1\n", ws);
  parse_element_file("elem x in A\ncoord 0.0 = 3/2\ncoord 1.0 = -7\npcoord 0.0 = 12\n", ws);
  const NamedElement& x = ws.element("x");
  EXPECT_EQ(x.group, "A");
  EXPECT_EQ(x.value.rational.get({0, 0}), Rational(3, 2));
  EXPECT_EQ(x.value.rational.get({1, 0}), Rational(-7));
  EXPECT_EQ(x.value.padic.at({0, 0}), TruncatedPAdic(5, 4, 12));

  EXPECT_THROW(parse_element_file("elem y in A\ncoord 1.0 = 1/2\n", ws), Error);
  EXPECT_THROW(parse_element_file("elem y in B\n", ws), Error);
  EXPECT_THROW(parse_element_file("elem y in A\npcoord 0.0 = 625\n", ws), Error);
}

TEST(Scalars, RoundTrip) {
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_cardinal(parse_cardinal("omega")), "omega");
  EXPECT_EQ(format_characteristic(parse_characteristic("(0; 5:inf, 2:3)")), "(0; 2:3, 5:inf)");
  EXPECT_EQ(format_characteristic(Characteristic::infinite()), "(inf;)");
  EXPECT_EQ(format_htype(parse_htype("[inf; 3, 2]")), "[inf; 2, 3]");
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Ladders, TextForm) {
  Ladder lad = parse_ladder("0,0; 2:1,1", 3);
  EXPECT_EQ(lad.k, 0u);
  ASSERT_EQ(lad.steps.size(), 1u);
  EXPECT_EQ(lad.steps[0], (LadderStep{2, 1, 1}));
  EXPECT_FALSE(lad.infinite);
  Ladder inf = parse_ladder("1,2; 3:1,2; 5:0,1; ...", 5);
  EXPECT_TRUE(inf.infinite);
  EXPECT_EQ(format_ladder(inf), "1,2; 3:1,2; 5:0,1; ...");
  // Parsing is syntactic; the digit clauses are checked by validation.
  EXPECT_THROW(validate_ladder(parse_ladder("0,0; 2:0,2", 3)), Error);
}

TEST(Properties, RandomGroupFilesRoundTrip) {
  verify::Rng rng(41);
  verify::GroupShape shape;
  shape.omega_chance = 0.3;
  for (int i = 0; i < 300; ++i) {
    FDGroup fd = verify::random_fdgroup(rng, shape);
    MixedGroup g(verify::coin(rng) ? std::vector<PadicBlock>{} : std::vector<PadicBlock>{{7, 5, 2}}, fd);
    std::string text = format_group("G", g);
    Workspace ws;
    parse_group_file(text, ws);
    EXPECT_EQ(ws.group("G"), g);
    EXPECT_EQ(format_group("G", ws.group("G")), text);

    MixedElement x(verify::random_element(rng, fd, 40));
    std::string etext = format_element("x", "G", x);
    parse_element_file(etext, ws);
    EXPECT_EQ(ws.element("x").value, x);
    EXPECT_EQ(format_element("x", "G", x), etext);
  }
}

TEST(Properties, LadderTextRoundTrip) {
  verify::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    Prime p = verify::small_primes()[verify::uniform(rng, 0, 3)];
    Ladder lad = verify::random_ladder(rng, p, 4, 20, verify::coin(rng));
    EXPECT_EQ(parse_ladder(format_ladder(lad), p), lad);
  }
}

TEST(Json, TwoTypeSchemaShape) {
  TwoType tt;
  tt.expression = {{1, 0}, {0, 1}};
  tt.locals[3] = LadderLocal{parse_ladder("0,0; 2:1,1", 3), false};
  tt.locals[5] = IndepWithInfinite{ExtHeight::inf(), ExtHeight(2)};
  std::string text = two_type_to_json(tt);
  EXPECT_NE(text.find("\"finite_ladder\""), std::string::npos);
  EXPECT_NE(text.find("\"indep_infinite\""), std::string::npos);
  EXPECT_EQ(two_type_from_json(text), tt);
  EXPECT_THROW(two_type_from_json("{\"rank\": 3}"), Error);
}

}  // namespace
}  // namespace tfab
