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

#include "tfab/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "tfab/error.hpp"
#include "tfab/groups.hpp"
#include "tfab/isotypy.hpp"
#include "tfab/padic.hpp"
#include "tfab/reduction.hpp"
#include "tfab/text.hpp"
#include "tfab/twotype.hpp"
#include "tfab/verify/generators.hpp"
#include "tfab/verify/oracles.hpp"

namespace tfab::verify {

namespace {

// Counts failed checks and keeps the first few messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failed";
    if (!extra.empty()) out << ", " << extra;
    if (!notes_.empty()) out << " [" << notes_ << "]";
    return out.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string notes_;
};

using Clock = std::chrono::steady_clock;

CriterionResult finish(int id, const std::string& title, double limit, Clock::time_point start,
                       const Tally& tally, const std::string& extra = {}) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.limit = limit;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = tally.ok() && (limit == 0 || r.seconds < limit);
  r.detail = tally.summary(extra);
  if (limit != 0 && r.seconds >= limit) r.detail += ", over time limit";
  return r;
}

// Runs `body`, turning an escaped exception into a failed check.
template <typename F>
void guarded(Tally& tally, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.check(false, what + ": " + e.what());
  }
}

Integer random_residue(Rng& rng, Prime p, std::uint64_t digits) {
  Integer x = 0;
  Integer scale = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    x += scale * static_cast<unsigned long>(uniform(rng, 0, p - 1));
    scale *= static_cast<unsigned long>(p);
  }
  return x;
}

template <typename F>
bool throws(F&& body) {
  try {
    body();
  } catch (const Error&) {
    return true;
  }
  return false;
}

}  // namespace

CriterionResult lattice_laws(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  for (int i = 0; i < 10000; ++i) {
    const Characteristic x = random_characteristic(rng);
    const Characteristic y = random_characteristic(rng);
    const Characteristic z = random_characteristic(rng);
    const auto meet = char_meet(x, y);
    const auto join = char_join(x, y);
    tally.check(meet == char_meet(y, x) && join == char_join(y, x), "commutativity");
    tally.check(char_meet(char_meet(x, y), z) == char_meet(x, char_meet(y, z)) &&
                    char_join(char_join(x, y), z) == char_join(x, char_join(y, z)),
                "associativity");
    tally.check(char_meet(x, char_join(y, z)) == char_join(meet, char_meet(x, z)) &&
                    char_join(x, char_meet(y, z)) == char_meet(join, char_join(x, z)),
                "distributivity");
    tally.check(char_meet(x, join) == x && char_join(x, meet) == x, "absorption");

    // Pointwise min and max at every listed prime and at one generic prime.
    std::set<Prime> primes = {17};
    for (const auto* c : {&x, &y}) {
      for (const auto& [p, h] : c->exceptions()) primes.insert(p);
    }
    for (Prime p : primes) {
      tally.check(meet.at(p) == std::min(x.at(p), y.at(p)), "meet is pointwise min");
      tally.check(join.at(p) == std::max(x.at(p), y.at(p)), "join is pointwise max");
    }
    tally.check(char_leq(meet, x) && char_leq(x, join), "order");
  }
  return finish(1, "characteristic lattice laws", 5, start, tally);
}

CriterionResult szmielew_invariants(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  GroupShape shape;
  shape.max_types = 3;
  shape.max_rank = 3;
  shape.max_total = 3;
  for (int i = 0; i < 200; ++i) {
    const FDGroup g = random_fdgroup(rng, shape);
    guarded(tally, "tf", [&] {
      for (Prime p : {2, 3, 5, 7}) {
        const Cardinal tf = tf_invariant(g, p);
        for (std::uint64_t n = 0; n <= 3; ++n) {
          tally.check(tf == Cardinal(tf_dimension_oracle(g, p, n, rng)), "tf vs oracle");
        }
      }
    });
  }
  const FDGroup z({Summand{Characteristic::zero(), Cardinal(1)}});
  const FDGroup zq({Summand{Characteristic::zero(), Cardinal(1)},
                    Summand{Characteristic::infinite(), Cardinal(1)}});
  tally.check(elementarily_equivalent(z, zq), "Z and Z+Q elementarily equivalent");
  tally.check(!iso1_equivalent(z, zq), "Z and Z+Q not 1-isotypic");
  return finish(2, "Szmielew invariants and elementary equivalence", 30, start, tally);
}

CriterionResult tuple_reduction(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  GroupShape shape;
  shape.max_types = 3;
  shape.max_rank = 4;
  shape.max_total = 4;
  std::uint64_t dependent = 0;
  for (int i = 0; i < 200; ++i) {
    const FDGroup g = random_fdgroup(rng, shape);
    const std::size_t n = uniform(rng, 1, 5);
    std::vector<Element> elems;
    while (elems.size() < n) {
      Element e = random_element(rng, g, 20);
      // Sometimes plant an integer dependency on earlier entries.
      if (!elems.empty() && coin(rng, 0.3)) {
        e = Element();
        for (const Element& f : elems) {
          e += Rational(static_cast<long>(uniform(rng, 0, 6)) - 3) * f;
        }
      }
      if (!e.is_zero()) elems.push_back(e);
    }
    guarded(tally, "reduce_tuple", [&] {
      const ReductionResult r = reduce_tuple(g, elems);
      const std::size_t m = bareiss_rank(elems);
      tally.check(r.basis.size() == m, "basis size is the rank");
      tally.check(bareiss_rank(r.basis) == r.basis.size(), "basis independent");
      for (const Element& b : r.basis) tally.check(is_member(g, b), "basis in group");
      tally.check(r.expression.size() == elems.size(), "expression shape");
      for (std::size_t j = 0; j < elems.size() && j < r.expression.size(); ++j) {
        tally.check(apply_row(r.expression[j], r.basis) == elems[j], "expression exact");
      }
      if (find_dependency(g, elems).has_value()) {
        ++dependent;
        tally.check(m < n, "dependency lowers the size");
      }
    });
  }
  return finish(3, "tuple reduction", 30, start, tally,
                std::to_string(dependent) + " dependent tuples");
}

CriterionResult dependency_uniqueness(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  constexpr std::uint64_t kPrecision = 24;
  std::uint64_t raising = 0;
  for (Prime p : {2, 3, 5}) {
    for (int i = 0; i < 200; ++i) {
      PadicVector a;
      PadicVector b;
      if (i % 2 == 0) {
        // Pairs with a planted ladder.
        const Ladder lad = random_ladder(rng, p, 4, 16, coin(rng, 0.3));
        const RealizedPair r = realize_ladder(lad, kPrecision);
        a = r.a;
        b = r.b;
      } else {
        const std::uint64_t k = uniform(rng, 0, 3);
        const std::uint64_t l = uniform(rng, 0, 3);
        const Integer unit = power(p, 0) + static_cast<unsigned long>(p) * random_residue(rng, p, 3);
        a = {TruncatedPAdic(p, kPrecision, power(p, k) * unit),
             TruncatedPAdic(p, kPrecision, power(p, k) * random_residue(rng, p, kPrecision))};
        b = {TruncatedPAdic(p, kPrecision, power(p, l) * random_residue(rng, p, kPrecision)),
             TruncatedPAdic(p, kPrecision, power(p, l) * unit)};
      }
      guarded(tally, "uniqueness", [&] {
        const std::uint64_t l = std::max(vector_valuation(a).value(), vector_valuation(b).value());
        for (std::uint64_t level = l; level < kPrecision; ++level) {
          const UniquenessReport rep = check_unique_dependency(a, b, level);
          raising += rep.raising.empty() ? 0 : 1;
          tally.check(rep.classes <= 1, "more than one raising class");
        }
      });
    }
  }
  return finish(4, "dependency uniqueness", 60, start, tally,
                std::to_string(raising) + " levels with a raising class");
}

CriterionResult ladder_round_trip(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  constexpr std::uint64_t kPrecision = 24;
  std::uint64_t exact = 0;
  std::uint64_t mutants = 0;
  for (Prime p : {3, 5}) {
    for (int i = 0; i < 50; ++i) {
      const Ladder lad = random_ladder(rng, p, 4, 16, coin(rng, 0.3));
      guarded(tally, "round trip", [&] {
        const RealizedPair r = realize_ladder(lad, kPrecision);
        tally.check(vector_valuation(r.a) == Height::exact(lad.k), "v(a) = k");
        tally.check(vector_valuation(r.b) == Height::exact(lad.l), "v(b) = l");
        const Integer lift = power(p, lad.l - lad.k);
        for (std::size_t s = 1; s <= lad.steps.size(); ++s) {
          const auto [big_a, big_b] = accumulated(lad, s);
          const Height h = vector_valuation(combine(big_a * lift, r.a, big_b, r.b));
          tally.check(h == Height::exact(lad.steps[s - 1].t), "v(c_i) = t_i");
        }
        const Ladder back = extract_ladder(r.a, r.b, kPrecision - 1);
        const Ladder canon = canonical_ladder(lad, kPrecision);
        tally.check(lad.infinite ? ladder_prefix_compatible(back, canon) : back == canon,
                    "extraction recovers the canonical ladder");
        if (back == lad) ++exact;
      });

      // Mutants that break one clause each.
      std::vector<Ladder> bad;
      if (lad.steps.size() >= 2) {
        Ladder m = lad;
        m.steps[1].t = m.steps[0].t;
        bad.push_back(m);
        m = lad;
        const auto [pa, pb] = accumulated(lad, 1);
        m.steps[1].alpha = Integer(pa % static_cast<unsigned long>(p)).get_ui();
        m.steps[1].beta = Integer(pb % static_cast<unsigned long>(p)).get_ui();
        bad.push_back(m);
      }
      Ladder m = lad;
      m.steps[0].alpha = p - 1;
      m.steps[0].beta = p - 1;
      bad.push_back(m);
      m = lad;
      m.steps[0].t = lad.l;
      bad.push_back(m);
      for (const Ladder& x : bad) {
        ++mutants;
        tally.check(throws([&] { validate_ladder(x); }), "mutant accepted by validation");
        tally.check(throws([&] { realize_ladder(x, kPrecision); }), "mutant realized");
      }
    }
  }
  return finish(5, "ladder realization round trip", 60, start, tally,
                std::to_string(exact) + " recovered verbatim, " + std::to_string(mutants) +
                    " mutants rejected");
}

CriterionResult infinite_split(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  int built = 0;
  while (built < 100) {
    const Prime p = small_primes()[uniform(rng, 0, 3)];
    const std::uint64_t k = uniform(rng, 0, 3);
    const std::uint64_t l = k + uniform(rng, 0, 3);
    const Integer alpha = static_cast<long>(uniform(rng, 1, 12));
    const Integer beta = static_cast<long>(uniform(rng, 1, 12)) * (coin(rng) ? 1 : -1);
    const Integer s = static_cast<long>(uniform(rng, 1, 12));
    if (gcd(alpha, beta) != 1 || alpha * beta * s % static_cast<unsigned long>(p) == 0) continue;

    // Q + B where B has a finite height h0 at p. Choosing the B parts as
    // p^k beta s and -p^l alpha s makes alpha p^(l-k) a + beta b lie in Q.
    const std::uint64_t h0 = uniform(rng, 0, 2);
    const FDGroup fd({Summand{Characteristic::infinite(), Cardinal(1)},
                      Summand{Characteristic::normalized(Default::kZero, {{p, h0}}), Cardinal(1)}});
    const MixedGroup g(fd);
    auto q = [&] {
      return Rational(static_cast<long>(uniform(rng, 0, 40)) - 20,
                      static_cast<unsigned long>(uniform(rng, 1, 9)));
    };
    MixedElement a;
    MixedElement b;
    Rational qa = q();
    Rational qb = q();
    qa.canonicalize();
    qb.canonicalize();
    a.rational.set({0, 0}, qa);
    b.rational.set({0, 0}, qb);
    a.rational.set({1, 0}, Rational(power(p, k) * beta * s));
    b.rational.set({1, 0}, Rational(-power(p, l) * alpha * s));
    const Integer lift = power(p, l - k);
    if (bareiss_rank({a.rational, b.rational}) != 2) continue;
    if (combine(alpha * lift, a, beta, b).is_zero()) continue;
    ++built;
    guarded(tally, "split", [&] {
      const InfiniteSplit sp = split_infinite_dependency(g, a, b, alpha, beta, p);
      tally.check(combine(sp.gamma * lift, sp.c, -beta, sp.d) == a, "first identity");
      tally.check(combine(sp.delta * lift, sp.c, -alpha * lift, sp.d) == scale(-1, b),
                  "second identity");
      tally.check(mixed_height(g, sp.c, p).is_infinite(), "c divisible by p");
      tally.check(mixed_height(g, sp.d, p).is_exact(), "d of finite height");
      tally.check(height_independent_oracle(g, sp.c, sp.d, p, 50), "height independence");
    });
  }
  return finish(6, "infinite-height split", 10, start, tally);
}

CriterionResult two_type_round_trip(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  constexpr std::uint64_t kPrecision = 24;
  std::map<std::string, int> cases;
  for (int i = 0; i < 100; ++i) {
    const TwoType tt = random_two_type(rng, 3, 16, kPrecision);
    for (const auto& [p, local] : tt.locals) ++cases[case_name(local)];
    guarded(tally, "two-type", [&] {
      const Realization r = realize_two_type(tt, kPrecision);
      const TwoType back = classify_pair(r.carrier, r.x, r.y);
      tally.check(same_up_to_precision(back, tt), two_type_to_json(tt));
    });
  }
  std::string mix;
  for (const auto& [name, count] : cases) {
    mix += (mix.empty() ? "" : " ") + name + "=" + std::to_string(count);
  }
  return finish(7, "two-type round trip", 60, start, tally, mix);
}

namespace {

// Same finite values at the infinite primes, other values moved around.
Characteristic equivalent_characteristic(Rng& rng, const Characteristic& c) {
  std::map<Prime, ExtHeight> values(c.exceptions().begin(), c.exceptions().end());
  for (Prime p : small_primes()) {
    if (c.at(p).is_finite() && coin(rng, 0.3)) values[p] = ExtHeight(uniform(rng, 0, 3));
  }
  return Characteristic::normalized(c.default_class(), values);
}

FDGroup isomorphic_copy(Rng& rng, const FDGroup& g) {
  std::vector<Summand> out;
  for (const Summand& s : g.summands()) {
    std::uint64_t left = s.multiplicity.value();
    while (left > 0) {
      const std::uint64_t take = uniform(rng, 1, left);
      out.push_back({equivalent_characteristic(rng, s.chi), Cardinal(take)});
      left -= take;
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return FDGroup(out);
}

FDGroup perturbed(Rng& rng, const FDGroup& g) {
  std::vector<Summand> out = g.summands();
  Summand& s = out[uniform(rng, 0, out.size() - 1)];
  if (coin(rng)) {
    std::map<Prime, ExtHeight> values(s.chi.exceptions().begin(), s.chi.exceptions().end());
    const Prime p = small_primes()[uniform(rng, 0, 3)];
    values[p] = s.chi.at(p).is_inf() ? ExtHeight(0) : ExtHeight::inf();
    s.chi = Characteristic::normalized(s.chi.default_class(), values);
  } else if (s.multiplicity.value() > 1 && coin(rng)) {
    s.multiplicity = Cardinal(s.multiplicity.value() - 1);
  } else {
    s.multiplicity = Cardinal(s.multiplicity.value() + 1);
  }
  return isomorphic_copy(rng, FDGroup(out));
}

// Pairs of finite descriptions: isomorphic, nearly isomorphic, or unrelated.
std::pair<FDGroup, FDGroup> random_pair(Rng& rng) {
  GroupShape shape;
  shape.max_types = 4;
  shape.max_rank = 5;
  const FDGroup a = random_fdgroup(rng, shape);
  switch (uniform(rng, 0, 2)) {
    case 0: return {a, isomorphic_copy(rng, a)};
    case 1: return {a, perturbed(rng, a)};
    default: return {a, random_fdgroup(rng, shape)};
  }
}

FDGroup rank_one_sum(const std::vector<std::pair<Characteristic, Cardinal>>& parts) {
  std::vector<Summand> out;
  for (const auto& [c, m] : parts) out.push_back({c, m});
  return FDGroup(out);
}

}  // namespace

CriterionResult isotypy_decision(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  int isomorphic = 0;
  for (int i = 0; i < 600; ++i) {
    const auto [a, b] = random_pair(rng);
    const bool iso = fd_isomorphic(a, b);
    isomorphic += iso ? 1 : 0;
    tally.check(separable_isotypic(a, b) == iso, "isotypic and isomorphic disagree");
  }

  // Exact-type counts against the brute-force oracle.
  GroupShape small;
  small.max_types = 3;
  small.max_rank = 3;
  small.max_total = 3;
  for (int i = 0; i < 150; ++i) {
    const FDGroup g = random_fdgroup(rng, small);
    std::set<HType> types;
    for (const Summand& s : g.summands()) types.insert(htype_of(s.chi));
    for (int round = 0; round < 2; ++round) {
      for (const HType& s : std::set<HType>(types)) {
        for (const HType& t : std::set<HType>(types)) {
          types.insert(htype_meet(s, t));
          types.insert(htype_join(s, t));
        }
      }
    }
    types.insert(random_htype(rng));
    for (const HType& t : types) {
      guarded(tally, "oracle", [&] {
        tally.check(max_independent_of_type(g, t) == Cardinal(exact_type_oracle(g, t, 5)),
                    "exact-type count vs oracle at " + format_htype(t));
      });
    }
  }

  // B_s + B_t against B_(s meet t) + B_(s join t) for incomparable s, t.
  int family = 0;
  while (family < 50) {
    const HType s = random_htype(rng, 3);
    const HType t = random_htype(rng, 3);
    if (htype_leq(s, t) || htype_leq(t, s)) continue;
    ++family;
    const Cardinal one(1);
    const FDGroup lhs = rank_one_sum({{s.representative(), one}, {t.representative(), one}});
    const FDGroup rhs = rank_one_sum({{htype_meet(s, t).representative(), one},
                                      {htype_join(s, t).representative(), one}});
    tally.check(!separable_isotypic(lhs, rhs), "meet/join family decided isotypic");
  }
  return finish(8, "separable isotypy decision", 120, start, tally,
                std::to_string(isomorphic) + " isomorphic pairs");
}

CriterionResult implication_chain(std::uint64_t seed) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  for (int i = 0; i < 600; ++i) {
    const auto [a, b] = random_pair(rng);
    const bool iso = fd_isomorphic(a, b);
    const bool sep = separable_isotypic(a, b);
    const bool one = iso1_equivalent(a, b);
    const bool ee = elementarily_equivalent(a, b);
    tally.check(!iso || sep, "isomorphic but not isotypic");
    tally.check(!sep || one, "isotypic but not 1-isotypic");
    tally.check(!one || ee, "1-isotypic but not elementarily equivalent");
  }

  const Characteristic z = Characteristic::zero();
  const Characteristic q = Characteristic::infinite();
  const Characteristic s = Characteristic::normalized(Default::kZero, {{2, ExtHeight::inf()}});
  const Characteristic t = Characteristic::normalized(Default::kZero, {{3, ExtHeight::inf()}});
  const Cardinal w = Cardinal::omega();
  const Cardinal one(1);
  const Cardinal two(2);

  // Isotypic, not isomorphic; needs infinite multiplicities.
  const FDGroup a1 = rank_one_sum({{s, w}, {t, w}, {z, one}});
  const FDGroup a2 = rank_one_sum({{s, w}, {t, w}});
  tally.check(separable_isotypic(a1, a2) && !fd_isomorphic(a1, a2), "isotypic vs isomorphic");

  // 1-isotypic, not isotypic.
  const FDGroup b1 = rank_one_sum({{z, two}, {q, one}});
  const FDGroup b2 = rank_one_sum({{z, two}, {q, two}});
  tally.check(iso1_equivalent(b1, b2) && !separable_isotypic(b1, b2), "1-isotypic vs isotypic");

  // Elementarily equivalent, not 1-isotypic.
  const FDGroup c1 = rank_one_sum({{z, one}});
  const FDGroup c2 = rank_one_sum({{z, one}, {q, one}});
  tally.check(elementarily_equivalent(c1, c2) && !iso1_equivalent(c1, c2),
              "elementary equivalence vs 1-isotypic");
  return finish(9, "implication chain", 0, start, tally);
}

CriterionResult text_round_trip(std::uint64_t seed, const std::vector<CriterionResult>& earlier) {
  const auto start = Clock::now();
  Rng rng(seed);
  Tally tally;
  GroupShape shape;
  shape.omega_chance = 0.2;
  for (int i = 0; i < 1000; ++i) {
    const FDGroup fd = random_fdgroup(rng, shape);
    std::vector<PadicBlock> blocks;
    const std::size_t nblocks = uniform(rng, 0, 2);
    for (std::size_t j = 0; j < nblocks; ++j) {
      blocks.push_back({small_primes()[uniform(rng, 0, 3)], uniform(rng, 1, 30), uniform(rng, 1, 3)});
    }
    const MixedGroup g(blocks, fd);
    MixedElement x(random_element(rng, fd, 50));
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (coin(rng)) {
        const PadicBlock& blk = blocks[j];
        x.padic.emplace(CoordKey{j, uniform(rng, 0, blk.copies - 1)},
                        TruncatedPAdic(blk.p, blk.precision,
                                       random_residue(rng, blk.p, blk.precision)));
      }
    }
    guarded(tally, "text", [&] {
      const std::string gtext = format_group("G", g);
      const std::string etext = format_element("x", "G", x);
      Workspace ws;
      parse_group_file(gtext, ws);
      parse_element_file(etext, ws);
      tally.check(ws.group("G") == g, "group reconstructed");
      tally.check(ws.element("x").value == x, "element reconstructed");
      tally.check(format_group("G", ws.group("G")) == gtext, "group text stable");
      tally.check(format_element("x", "G", ws.element("x").value) == etext,
                  "element text stable");
    });
  }
  int passed = 0;
  for (const CriterionResult& r : earlier) passed += r.pass ? 1 : 0;
  tally.check(earlier.size() == 9 && passed == 9, "criteria 1-9 must all pass");
  return finish(10, "text round trip and aggregation", 0, start, tally,
                std::to_string(passed) + "/" + std::to_string(earlier.size()) +
                    " earlier criteria passed");
}

std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& report) {
  using Fn = CriterionResult (*)(std::uint64_t);
  const Fn criteria[] = {lattice_laws,          szmielew_invariants, tuple_reduction,
                         dependency_uniqueness, ladder_round_trip,   infinite_split,
                         two_type_round_trip,   isotypy_decision,    implication_chain};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    out.push_back(criteria[i](seed + i));
    if (report) report(out.back());
  }
  out.push_back(text_round_trip(seed + 9, out));
  if (report) report(out.back());
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s criterion %2d (%.2fs", r.pass ? "PASS" : "FAIL", r.id,
                r.seconds);
  std::string out = head;
  if (r.limit > 0) {
    char lim[32];
    std::snprintf(lim, sizeof lim, " of %.0fs", r.limit);
    out += lim;
  }
  return out + "): " + r.title + ": " + r.detail;
}

}  // namespace tfab::verify
