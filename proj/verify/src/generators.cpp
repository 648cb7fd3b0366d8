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

#include "tfab/verify/generators.hpp"

#include <algorithm>
#include <numeric>

namespace tfab::verify {

const std::vector<Prime>& small_primes() {
  static const std::vector<Prime> primes = {2, 3, 5, 7, 11, 13};
  return primes;
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

Prime pick_prime(Rng& rng, std::size_t pool = 6) {
  return small_primes()[uniform(rng, 0, std::min(pool, small_primes().size()) - 1)];
}

ExtHeight random_height(Rng& rng, std::uint64_t max_height) {
  if (coin(rng, 0.25)) return ExtHeight::inf();
  return ExtHeight(uniform(rng, 0, max_height));
}

}  // namespace

Characteristic random_characteristic(Rng& rng, std::size_t max_exceptions,
                                     std::uint64_t max_height) {
  Default d = coin(rng, 0.3) ? Default::kInf : Default::kZero;
  std::map<Prime, ExtHeight> values;
  std::size_t n = uniform(rng, 0, max_exceptions);
  for (std::size_t i = 0; i < n; ++i) values[pick_prime(rng)] = random_height(rng, max_height);
  return Characteristic::normalized(d, values);
}

HType random_htype(Rng& rng, std::size_t max_flips) {
  std::set<Prime> flips;
  std::size_t n = uniform(rng, 0, max_flips);
  for (std::size_t i = 0; i < n; ++i) flips.insert(pick_prime(rng, 4));
  return HType(coin(rng, 0.3) ? Default::kInf : Default::kZero, flips);
}

FDGroup random_fdgroup(Rng& rng, const GroupShape& shape) {
  std::vector<Summand> summands;
  std::size_t types = uniform(rng, 1, shape.max_types);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < types; ++i) {
    std::uint64_t room = shape.max_total == 0 ? shape.max_rank : shape.max_total - total;
    if (room == 0) break;
    Summand s;
    s.chi = random_characteristic(rng, 3, 3);
    std::uint64_t r = uniform(rng, 1, std::min(room, shape.max_rank));
    total += r;
    s.multiplicity = coin(rng, shape.omega_chance) ? Cardinal::omega() : Cardinal(r);
    summands.push_back(s);
  }
  return FDGroup(std::move(summands));
}

Element random_element(Rng& rng, const FDGroup& group, std::int64_t bound) {
  Element e;
  for (std::size_t s = 0; s < group.size(); ++s) {
    const Summand& sm = group.summands()[s];
    std::uint64_t copies = sm.multiplicity.is_omega() ? 2 : sm.multiplicity.value();
    for (std::uint64_t c = 0; c < copies; ++c) {
      if (coin(rng, 0.3)) continue;
      auto v = static_cast<std::int64_t>(uniform(rng, 0, 2 * bound)) - bound;
      Rational q(v);
      // Allowed denominator: a power of a prime with positive height.
      Prime p = pick_prime(rng, 3);
      ExtHeight h = sm.chi.at(p);
      std::uint64_t cap = h.is_inf() ? 2 : std::min<std::uint64_t>(h.value(), 2);
      if (cap > 0 && coin(rng, 0.4)) {
        q /= Rational(power(p, uniform(rng, 1, cap)));
        q.canonicalize();
      }
      e.set({s, c}, q);
    }
  }
  return e;
}

Ladder random_ladder(Rng& rng, Prime p, std::size_t max_steps, std::uint64_t max_t,
                     bool infinite) {
  for (;;) {
    Ladder lad;
    lad.p = p;
    lad.k = uniform(rng, 0, 2);
    lad.l = lad.k + uniform(rng, 0, 2);
    lad.infinite = infinite;
    std::size_t steps = uniform(rng, 1, max_steps);
    std::uint64_t t = lad.l;
    bool ok = true;
    for (std::size_t i = 0; i < steps && ok; ++i) {
      std::uint64_t room = max_t > t ? max_t - t : 0;
      if (room == 0) {
        ok = i > 0;
        break;
      }
      t += uniform(rng, 1, std::min<std::uint64_t>(room, 4));
      // Rejection sampling over digit pairs; a valid pair always exists.
      for (;;) {
        lad.steps.push_back({t, uniform(rng, 0, p - 1), uniform(rng, 0, p - 1)});
        if (ladder_violations(lad).empty()) break;
        lad.steps.pop_back();
      }
    }
    if (ok && !lad.steps.empty()) return lad;
  }
}

namespace {

PrimeLocalType random_local(Rng& rng, Prime p, std::uint64_t max_t) {
  for (;;) {
    switch (uniform(rng, 0, 3)) {
      case 0: {
        std::uint64_t h = uniform(rng, 0, 4);
        switch (uniform(rng, 0, 2)) {
          case 0: return IndepWithInfinite{ExtHeight::inf(), ExtHeight(h)};
          case 1: return IndepWithInfinite{ExtHeight(h), ExtHeight::inf()};
          default: return IndepWithInfinite{ExtHeight::inf(), ExtHeight::inf()};
        }
      }
      case 1: return IndepFinite{uniform(rng, 0, 4), uniform(rng, 0, 4)};
      case 2: {
        SplitInfinite s;
        s.k = uniform(rng, 0, 3);
        s.l = s.k + uniform(rng, 0, 3);
        do {
          s.alpha = static_cast<long>(uniform(rng, 1, 7));
          s.beta = static_cast<long>(uniform(rng, 1, 7)) * (coin(rng) ? 1 : -1);
        } while (gcd(s.alpha, s.beta) != 1 || s.alpha % p == 0 || s.beta % p == 0);
        s.swapped = s.k != s.l && coin(rng);
        return s;
      }
      default: {
        bool infinite = coin(rng, 0.35);
        Ladder lad = random_ladder(rng, p, 4, max_t, infinite);
        return LadderLocal{lad, lad.k != lad.l && coin(rng)};
      }
    }
  }
}

}  // namespace

TwoType random_two_type(Rng& rng, std::size_t max_primes, std::uint64_t max_t,
                        std::uint64_t precision) {
  TwoType tt;
  if (coin(rng, 0.15)) {
    tt.rank = 1;
    tt.char_single = random_characteristic(rng);
    Integer m;
    Integer n;
    do {
      m = static_cast<long>(uniform(rng, 1, 9)) * (coin(rng) ? 1 : -1);
      n = static_cast<long>(uniform(rng, 1, 9));
    } while (gcd(m, n) != 1);
    tt.expression = {{m}, {n}};
    return tt;
  }
  tt.rank = 2;
  tt.expression = {{1, 0}, {0, 1}};
  switch (uniform(rng, 0, 2)) {
    case 0: tt.default_local = IndepFinite{0, 0}; break;
    case 1: tt.default_local = IndepWithInfinite{ExtHeight::inf(), ExtHeight(0)}; break;
    default: tt.default_local = IndepWithInfinite{ExtHeight::inf(), ExtHeight::inf()}; break;
  }
  for (;;) {
    tt.locals.clear();
    std::size_t n = uniform(rng, 1, max_primes);
    for (std::size_t i = 0; i < n; ++i) {
      Prime p = pick_prime(rng, 4);
      tt.locals[p] = random_local(rng, p, max_t);
    }
    TwoType out = canonicalize(tt, precision);
    // Truncated ladders keep the prefix that can be realized at this
    // precision; redraw when nothing is left.
    bool ok = true;
    for (auto& [p, local] : out.locals) {
      auto* lad = std::get_if<LadderLocal>(&local);
      if (lad == nullptr || !lad->ladder.infinite) continue;
      auto& steps = lad->ladder.steps;
      while (!steps.empty() && steps.back().t + 1 >= precision) steps.pop_back();
      ok = ok && !steps.empty();
    }
    if (ok) return out;
  }
}

}  // namespace tfab::verify
