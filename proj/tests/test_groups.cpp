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
#include "tfab/groups.hpp"
#include "tfab/text.hpp"
#include "tfab/verify/generators.hpp"
#include "tfab/verify/oracles.hpp"

namespace tfab {
namespace {

Characteristic ch(const char* text) { return parse_characteristic(text); }

FDGroup group(const std::string& summands) {
  Workspace ws;
  parse_group_file("group G\n" + summands, ws);
  return ws.group("G").rational();
}

Element coord(std::size_t s, const Rational& v) {
  Element e;
  e.set({s, 0}, v);
  return e;
}

TEST(RationalGroup, Membership) {
  EXPECT_TRUE(member(Rational(3, 2), {ch("(0; 2:3)")}));
  EXPECT_FALSE(member(Rational(1, 3), {ch("(0; 2:inf)")}));
  EXPECT_TRUE(member(Rational(7), {ch("(0;)")}));
}

TEST(RationalGroup, Heights) {
  EXPECT_EQ(height_rank1({ch("(0;)")}, Rational(6), 2), ExtHeight(1));
  EXPECT_EQ(height_rank1({ch("(inf;)")}, Rational(5), 7), ExtHeight::inf());
  EXPECT_EQ(height_rank1({ch("(0; 2:3)")}, Rational(3, 2), 2), ExtHeight(2));
  EXPECT_EQ(char_rank1({ch("(0; 2:3)")}, Rational(3, 2)), ch("(0; 2:2, 3:1)"));
  try {
    height_rank1({ch("(0;)")}, Rational(0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroElement);
  }
}

TEST(Element, CharacteristicAndHeight) {
  FDGroup zq = group("summand (0;) rank=1\nsummand (inf;) rank=1\n");
  EXPECT_EQ(elem_char(zq, coord(0, 1) + coord(1, 1)), ch("(0;)"));
  EXPECT_EQ(elem_height(group("summand (0;) rank=1\n"), coord(0, 4), 2), ExtHeight(2));
  FDGroup mixed = group("summand (0; 2:5) rank=1\nsummand (0;) rank=1\n");
  EXPECT_EQ(elem_height(mixed, coord(0, Rational(1, 2)) + coord(1, 2), 2), ExtHeight(1));
}

TEST(Element, MembershipViolation) {
  FDGroup z = group("summand (0;) rank=2\n");
  Element bad = coord(0, Rational(1, 2));
  EXPECT_FALSE(is_member(z, bad));
  EXPECT_THROW(validate_element(z, bad), Error);
  Element out_of_range;
  out_of_range.set({0, 5}, 1);
  EXPECT_THROW(validate_element(z, out_of_range), Error);
}

TEST(Szmielew, TfValues) {
  EXPECT_EQ(tf_invariant(group("summand (0;) rank=3\n"), 5), Cardinal(3));
  EXPECT_EQ(tf_invariant(group("summand (inf;) rank=1\n"), 2), Cardinal(0));
  FDGroup half = group("summand (0; 2:inf) rank=1\n");
  EXPECT_EQ(tf_invariant(half, 2), Cardinal(0));
  EXPECT_EQ(tf_invariant(half, 3), Cardinal(1));

  SzmielewProfile zq2 = szmielew_profile(group("summand (inf;) rank=2\n"));
  EXPECT_EQ(zq2.tf_default, Cardinal(0));
  EXPECT_TRUE(zq2.tf_exceptions.empty());
  SzmielewProfile p = szmielew_profile(group("summand (0;) rank=1\nsummand (0; 2:inf) rank=1\n"));
  EXPECT_EQ(p.tf(2), Cardinal(1));
  EXPECT_EQ(p.tf(3), Cardinal(2));
  EXPECT_EQ(szmielew_profile(group("summand (0;) rank=omega\n")).tf(7), Cardinal::omega());
}

TEST(Szmielew, ElementaryEquivalence) {
  FDGroup z = group("summand (0;) rank=1\n");
  EXPECT_TRUE(elementarily_equivalent(z, group("summand (0;) rank=1\nsummand (inf;) rank=1\n")));
  EXPECT_FALSE(elementarily_equivalent(z, group("summand (0;) rank=2\n")));
  EXPECT_TRUE(elementarily_equivalent(z, z));
}

TEST(Iso1, RealizableTypes) {
  using S = std::set<HType>;
  EXPECT_EQ(realizable_htypes(group("summand (0;) rank=1\n")), S{HType()});
  EXPECT_EQ(realizable_htypes(group("summand (0;) rank=1\nsummand (inf;) rank=1\n")),
            (S{HType(), HType(Default::kInf, {})}));
  S two = realizable_htypes(group("summand (0; 2:inf) rank=1\nsummand (0; 3:inf) rank=1\n"));
  EXPECT_EQ(two.size(), 3u);
  EXPECT_TRUE(two.count(HType()) > 0);
}

TEST(Iso1, Decisions) {
  FDGroup z = group("summand (0;) rank=1\n");
  EXPECT_FALSE(iso1_equivalent(z, group("summand (0;) rank=1\nsummand (inf;) rank=1\n")));
  EXPECT_TRUE(iso1_equivalent(group("summand (0;) rank=1\nsummand (0; 2:inf) rank=1\n"),
                              group("summand (0; 2:inf) rank=1\nsummand (0;) rank=1\n")));
  EXPECT_FALSE(iso1_equivalent(z, group("summand (0;) rank=2\n")));
}

TEST(Properties, TfMatchesLatticeOracle) {
  verify::Rng rng(21);
  verify::GroupShape shape;
  shape.max_total = 3;
  shape.max_rank = 3;
  for (int i = 0; i < 60; ++i) {
    FDGroup g = verify::random_fdgroup(rng, shape);
    for (Prime p : {2, 3, 5}) {
      for (std::uint64_t n = 0; n <= 2; ++n) {
        EXPECT_EQ(tf_invariant(g, p), Cardinal(verify::tf_dimension_oracle(g, p, n, rng)));
      }
    }
  }
}

TEST(Properties, ElementHeightsAndTypes) {
  verify::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    FDGroup g = verify::random_fdgroup(rng, {});
    Element x = verify::random_element(rng, g, 30);
    if (x.is_zero()) continue;
    ASSERT_TRUE(is_member(g, x));
    Characteristic c = elem_char(g, x);
    for (Prime p : {2, 3, 5, 7}) EXPECT_EQ(c.at(p), elem_height(g, x, p));
    EXPECT_EQ(elem_htype(g, x), htype_of(c));
    // Scaling by p moves the height at p up by one when finite.
    Element px = Rational(3) * x;
    ExtHeight h = elem_height(g, x, 3);
    EXPECT_EQ(elem_height(g, px, 3), h.is_inf() ? h : ExtHeight(h.value() + 1));
    EXPECT_TRUE(realizable_htypes(g).count(elem_htype(g, x)) > 0);
  }
}

}  // namespace
}  // namespace tfab
