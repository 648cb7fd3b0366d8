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

#include "tfab/isotypy.hpp"
#include "tfab/text.hpp"
#include "tfab/verify/generators.hpp"
#include "tfab/verify/oracles.hpp"

namespace tfab {
namespace {

FDGroup group(const std::string& summands) {
  Workspace ws;
  parse_group_file("group G\n" + summands, ws);
  return ws.group("G").rational();
}

HType ht(const char* text) { return parse_htype(text); }

const char* kZQ = "summand (0;) rank=1\nsummand (inf;) rank=1\n";

TEST(Filtration, AOfT) {
  FDGroup zq = group(kZQ);
  FDGroup q = group("summand (inf;) rank=1\n");
  EXPECT_EQ(a_of_t(zq, ht("[0;]")), zq);
  EXPECT_EQ(a_star_of_t(zq, ht("[0;]")), q);
  EXPECT_EQ(a_of_t(zq, ht("[inf;]")), q);
  EXPECT_TRUE(a_star_of_t(zq, ht("[inf;]")).empty());
  EXPECT_TRUE(a_of_t(group("summand (0; 2:inf) rank=1\n"), ht("[0; 3]")).empty());
}

TEST(Filtration, RankAt) {
  EXPECT_EQ(rank_At(group("summand (0;) rank=3\n"), ht("[0;]")), Cardinal(3));
  EXPECT_EQ(rank_At(group(kZQ), ht("[inf;]")), Cardinal(1));
  EXPECT_EQ(rank_At(group(kZQ), ht("[0; 5]")), Cardinal(0));
}

TEST(ExactTypeCount, Examples) {
  // t = [0;] below s = [0; 2].
  FDGroup ts = group("summand (0;) rank=1\nsummand (0; 2:inf) rank=1\n");
  EXPECT_EQ(max_independent_of_type(ts, ht("[0;]")), Cardinal(2));
  EXPECT_EQ(max_independent_of_type(ts, ht("[0; 2]")), Cardinal(1));
  EXPECT_EQ(verify::exact_type_oracle(ts, ht("[0;]"), 5), 2u);
  EXPECT_EQ(verify::exact_type_oracle(ts, ht("[0; 2]"), 5), 1u);

  FDGroup ss = group("summand (0; 2:inf) rank=2\n");
  EXPECT_EQ(max_independent_of_type(ss, ht("[0;]")), Cardinal(0));
  EXPECT_EQ(max_independent_of_type(group("summand (0; 3:inf) rank=omega\n"), ht("[0; 3]")),
            Cardinal::omega());
}

TEST(SeparableIsotypic, Examples) {
  FDGroup st = group("summand (0; 2:inf) rank=1\nsummand (0; 3:inf) rank=1\n");
  FDGroup meet_join = group("summand (0;) rank=1\nsummand (0; 2:inf, 3:inf) rank=1\n");
  EXPECT_FALSE(separable_isotypic(st, meet_join));
  EXPECT_TRUE(separable_isotypic(st, group("summand (0; 3:inf) rank=1\nsummand (0; 2:inf) rank=1\n")));
  EXPECT_FALSE(separable_isotypic(group("summand (0;) rank=omega\n"),
                                  group("summand (0;) rank=omega\nsummand (inf;) rank=1\n")));
}

TEST(FdIsomorphic, EquivalentCharacteristicsAgree) {
  EXPECT_TRUE(fd_isomorphic(group("summand (0; 2:3) rank=2\n"),
                            group("summand (0;) rank=1\nsummand (0; 5:1) rank=1\n")));
  EXPECT_FALSE(fd_isomorphic(group("summand (0;) rank=2\n"), group("summand (0;) rank=3\n")));
}

// With infinite multiplicities the meet B_(s meet t) is absorbed: both
// groups have omega independent elements of every type in the closure.
TEST(OmegaCounterexamples, IsotypicButNotIsomorphic) {
  FDGroup a1 = group("summand (0; 2:inf) rank=omega\nsummand (0; 3:inf) rank=omega\nsummand (0;) rank=1\n");
  FDGroup a2 = group("summand (0; 2:inf) rank=omega\nsummand (0; 3:inf) rank=omega\n");
  EXPECT_TRUE(separable_isotypic(a1, a2));
  EXPECT_FALSE(fd_isomorphic(a1, a2));
}

TEST(OmegaCounterexamples, IsotypicButNotElementarilyEquivalent) {
  FDGroup b1 = group("summand (inf;) rank=omega\nsummand (0;) rank=1\n");
  FDGroup b2 = group("summand (inf;) rank=omega\nsummand (0;) rank=2\n");
  EXPECT_TRUE(separable_isotypic(b1, b2));
  EXPECT_FALSE(elementarily_equivalent(b1, b2));
}

TEST(Chain, SeparatingPairs) {
  FDGroup z2q = group("summand (0;) rank=2\nsummand (inf;) rank=1\n");
  FDGroup z2q2 = group("summand (0;) rank=2\nsummand (inf;) rank=2\n");
  EXPECT_TRUE(iso1_equivalent(z2q, z2q2));
  EXPECT_FALSE(separable_isotypic(z2q, z2q2));
  FDGroup z = group("summand (0;) rank=1\n");
  EXPECT_TRUE(elementarily_equivalent(z, group(kZQ)));
  EXPECT_FALSE(iso1_equivalent(z, group(kZQ)));
}

TEST(Properties, ProfileAgainstOracleAndChain) {
  verify::Rng rng(31);
  verify::GroupShape small;
  small.max_types = 3;
  small.max_total = 3;
  small.max_rank = 3;
  for (int i = 0; i < 40; ++i) {
    FDGroup g = verify::random_fdgroup(rng, small);
    TypeRankProfile prof = type_rank_profile(g);
    for (const auto& [t, n] : prof.independent_counts) {
      EXPECT_EQ(n, Cardinal(verify::exact_type_oracle(g, t, 4))) << format_htype(t);
    }
  }
  verify::GroupShape shape;
  for (int i = 0; i < 300; ++i) {
    FDGroup a = verify::random_fdgroup(rng, shape);
    FDGroup b = verify::coin(rng) ? a : verify::random_fdgroup(rng, shape);
    bool iso = fd_isomorphic(a, b);
    EXPECT_EQ(separable_isotypic(a, b), iso);
    if (iso) {
      EXPECT_TRUE(iso1_equivalent(a, b));
      EXPECT_TRUE(elementarily_equivalent(a, b));
    }
  }
}

}  // namespace
}  // namespace tfab
