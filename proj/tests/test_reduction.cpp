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
#include "tfab/reduction.hpp"

namespace tfab {
namespace {

Element vec(std::initializer_list<Rational> xs) {
  Element e;
  std::size_t i = 0;
  for (const Rational& x : xs) e.set({0, i++}, x);
  return e;
}

FDGroup z_n(std::uint64_t n) { return FDGroup({Summand{Characteristic::zero(), Cardinal(n)}}); }

TEST(FindDependency, Examples) {
  FDGroup z = z_n(2);
  auto rel = find_dependency(z, {vec({2}), vec({3})});
  ASSERT_TRUE(rel);
  EXPECT_EQ(rel->coefficients, (std::vector<Integer>{3, -2}));
  EXPECT_FALSE(find_dependency(z, {vec({1, 0}), vec({0, 1})}));
  rel = find_dependency(z, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
  ASSERT_TRUE(rel);
  EXPECT_EQ(rel->coefficients, (std::vector<Integer>{1, 1, -1}));
}

TEST(ReducePair, Examples) {
  FDGroup z = z_n(1);
  EXPECT_EQ(reduce_pair(z, vec({2}), vec({3}), {{3, -2}}), vec({1}));
  EXPECT_EQ(reduce_pair(z, vec({5}), vec({5}), {{1, -1}}), vec({5}));
  EXPECT_EQ(reduce_pair(z, vec({6}), vec({4}), {{2, -3}}), vec({2}));
  try {
    reduce_pair(z, vec({2}), vec({3}), {{1, -1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAPairRelation);
  }
}

TEST(ReduceTuple, Examples) {
  FDGroup z = z_n(2);
  ReductionResult r = reduce_tuple(z, {vec({2}), vec({3})});
  EXPECT_EQ(r.basis, std::vector<Element>{vec({1})});
  EXPECT_EQ(r.expression, (IntegerMatrix{{2}, {3}}));

  r = reduce_tuple(z, {vec({1, 0}), vec({0, 1})});
  EXPECT_EQ(r.basis, (std::vector<Element>{vec({1, 0}), vec({0, 1})}));
  EXPECT_EQ(r.expression, (IntegerMatrix{{1, 0}, {0, 1}}));

  Element a = vec({1, 1});
  r = reduce_tuple(z, {a, 2 * a, 3 * a});
  ASSERT_EQ(r.basis.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(apply_row(r.expression[i], r.basis), Rational(i + 1) * a);
  }
}

TEST(ReduceTuple, RandomRoundTripAndRank) {
  std::mt19937_64 rng(3);
  FDGroup g({Summand{Characteristic::zero(), Cardinal(2)},
             Summand{Characteristic::make(Default::kZero, {{2, ExtHeight::inf()}}), Cardinal(2)}});
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n = 1 + rng() % 5;
    std::size_t dim = 1 + rng() % 4;
    std::vector<Element> gens;
    for (std::size_t j = 0; j < dim; ++j) {
      Element e;
      for (std::size_t c = 0; c < 4; ++c) {
        std::int64_t v = static_cast<std::int64_t>(rng() % 11) - 5;
        Rational q = c >= 2 ? Rational(v, 1 << (rng() % 3)) : Rational(v);
        q.canonicalize();
        e.set({c / 2, c % 2}, q);
      }
      gens.push_back(e);
    }
    std::vector<Element> t;
    while (t.size() < n) {
      Element e;
      for (const Element& g0 : gens) e += Rational(static_cast<long>(rng() % 9) - 4) * g0;
      if (!e.is_zero()) t.push_back(e);
    }
    ReductionResult r = reduce_tuple(g, t);
    EXPECT_EQ(r.basis.size(), rational_rank(t));
    EXPECT_FALSE(find_dependency(g, r.basis));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(apply_row(r.expression[i], r.basis), t[i]);
    for (const Element& b : r.basis) EXPECT_TRUE(is_member(g, b));
  }
}

TEST(SplitInfinite, Examples) {
  FDGroup g({Summand{Characteristic::infinite(), Cardinal(1)},
             Summand{Characteristic::zero(), Cardinal(1)}});
  // a = q - z, b = z: a + b = q has infinite height everywhere.
  MixedElement a;
  a.rational.set({0, 0}, 1);
  a.rational.set({1, 0}, -1);
  MixedElement b;
  b.rational.set({1, 0}, 1);
  InfiniteSplit s = split_infinite_dependency(g, a, b, 1, 1, 3);
  EXPECT_EQ(s.gamma, 1);
  EXPECT_EQ(s.delta, 0);
  EXPECT_EQ(s.c, combine(1, a, 1, b));
  EXPECT_EQ(s.d, b);

  // k = 0, l = 1 at p = 5: b = 5 z, a = q - z so 5 a + b = 5 q.
  MixedElement b5 = scale(5, b);
  s = split_infinite_dependency(g, a, b5, 1, 1, 5);
  EXPECT_EQ(s.gamma, 1);
  EXPECT_EQ(s.delta, 4);
  EXPECT_EQ(combine(5 * s.gamma, s.c, -1, s.d), a);
  EXPECT_EQ(combine(5 * s.delta, s.c, -5, s.d), scale(-1, b5));

  try {
    split_infinite_dependency(g, a, b5, 5, 1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

}  // namespace
}  // namespace tfab
