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

#include <benchmark/benchmark.h>

#include "tfab/groups.hpp"
#include "tfab/isotypy.hpp"
#include "tfab/padic.hpp"
#include "tfab/reduction.hpp"
#include "tfab/twotype.hpp"
#include "tfab/verify/generators.hpp"

namespace {

using namespace tfab;

void BM_CharMeet(benchmark::State& state) {
  verify::Rng rng(1);
  std::vector<Characteristic> cs;
  for (int i = 0; i < 256; ++i) cs.push_back(verify::random_characteristic(rng, 6, 8));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_meet(cs[i % 256], cs[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_CharMeet);

void BM_ReduceTuple(benchmark::State& state) {
  verify::Rng rng(2);
  verify::GroupShape shape;
  shape.max_total = 4;
  const FDGroup g = verify::random_fdgroup(rng, shape);
  std::vector<Element> elems;
  while (elems.size() < static_cast<std::size_t>(state.range(0))) {
    Element e = verify::random_element(rng, g, 20);
    if (!e.is_zero()) elems.push_back(e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(reduce_tuple(g, elems));
}
BENCHMARK(BM_ReduceTuple)->Arg(2)->Arg(5)->Arg(8);

void BM_LadderRoundTrip(benchmark::State& state) {
  verify::Rng rng(3);
  const Prime p = static_cast<Prime>(state.range(0));
  const Ladder lad = verify::random_ladder(rng, p, 4, 16, false);
  for (auto _ : state) {
    RealizedPair r = realize_ladder(lad, 24);
    benchmark::DoNotOptimize(extract_ladder(r.a, r.b, 23));
  }
}
BENCHMARK(BM_LadderRoundTrip)->Arg(3)->Arg(7)->Arg(13);

void BM_TwoTypeRoundTrip(benchmark::State& state) {
  verify::Rng rng(4);
  std::vector<TwoType> types;
  for (int i = 0; i < 32; ++i) types.push_back(verify::random_two_type(rng, 3, 16, 24));
  std::size_t i = 0;
  for (auto _ : state) {
    const TwoType& tt = types[i++ % types.size()];
    Realization r = realize_two_type(tt, 24);
    benchmark::DoNotOptimize(classify_pair(r.carrier, r.x, r.y));
  }
}
BENCHMARK(BM_TwoTypeRoundTrip);

void BM_SeparableIsotypic(benchmark::State& state) {
  verify::Rng rng(5);
  verify::GroupShape shape;
  shape.max_types = static_cast<std::size_t>(state.range(0));
  const FDGroup a = verify::random_fdgroup(rng, shape);
  const FDGroup b = verify::random_fdgroup(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(separable_isotypic(a, b));
}
BENCHMARK(BM_SeparableIsotypic)->Arg(2)->Arg(4)->Arg(8);

void BM_TfInvariant(benchmark::State& state) {
  verify::Rng rng(6);
  const FDGroup g = verify::random_fdgroup(rng, {});
  for (auto _ : state) benchmark::DoNotOptimize(szmielew_profile(g));
}
BENCHMARK(BM_TfInvariant);

}  // namespace

BENCHMARK_MAIN();
