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

#include "tfab/twotype.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "tfab/error.hpp"

namespace tfab {

namespace {

using Row = std::pair<Rational, Rational>;

// Rank of a two-column matrix and, for rank 1, a primitive integer kernel
// vector (u, v) with u > 0, or u = 0 and v > 0.
struct TwoColumnRank {
  int rank = 0;
  Integer u;
  Integer v;
};

TwoColumnRank two_column_rank(const std::vector<Row>& rows) {
  TwoColumnRank out;
  const Row* pivot = nullptr;
  for (const Row& r : rows) {
    if (r.first != 0 || r.second != 0) {
      pivot = &r;
      break;
    }
  }
  if (pivot == nullptr) return out;
  for (const Row& r : rows) {
    if (pivot->first * r.second - pivot->second * r.first != 0) {
      out.rank = 2;
      return out;
    }
  }
  out.rank = 1;
  // (u, v) = (y, -x) scaled to primitive integers.
  Rational u = pivot->second;
  Rational v = -pivot->first;
  Integer den;
  mpz_lcm(den.get_mpz_t(), u.get_den_mpz_t(), v.get_den_mpz_t());
  Integer iu = Rational(u * den).get_num();
  Integer iv = Rational(v * den).get_num();
  Integer g = gcd(iu, iv);
  iu /= g;
  iv /= g;
  if (iu < 0 || (iu == 0 && iv < 0)) {
    iu = -iu;
    iv = -iv;
  }
  out.u = iu;
  out.v = iv;
  return out;
}

template <typename Keep>
std::vector<Row> rational_rows(const FDGroup& group, const Element& a, const Element& b,
                               Keep keep) {
  std::set<CoordKey> keys;
  for (const auto& [k, v] : a.coords()) keys.insert(k);
  for (const auto& [k, v] : b.coords()) keys.insert(k);
  std::vector<Row> rows;
  for (const CoordKey& k : keys) {
    if (keep(group.summands().at(k.summand).chi)) rows.emplace_back(a.get(k), b.get(k));
  }
  return rows;
}

std::vector<Row> generic_rows(const FDGroup& group, const Element& a, const Element& b) {
  return rational_rows(group, a, b, [](const Characteristic& chi) {
    return chi.default_class() == Default::kZero;
  });
}

ExtHeight to_ext(const Height& h) {
  if (h.is_at_least()) {
    fail(ErrorCode::kIndeterminateAtPrecision,
         "p-height only known to be " + h.to_string());
  }
  return h.is_infinite() ? ExtHeight::inf() : ExtHeight(h.value());
}

bool has_padic_at(const MixedElement& x, Prime p) {
  return std::any_of(x.padic.begin(), x.padic.end(),
                     [p](const auto& kv) { return kv.second.prime() == p; });
}

std::uint64_t precision_at(const MixedGroup& g, Prime p) {
  std::uint64_t n = std::numeric_limits<std::uint64_t>::max();
  for (const PadicBlock& b : g.blocks()) {
    if (b.p == p) n = std::min(n, b.precision);
  }
  return n;
}

void add_primes(std::set<Prime>& out, const Integer& n) {
  if (n == 0) return;
  for (Prime p : prime_divisors(abs(n))) out.insert(p);
}

std::set<Prime> exceptional_primes(const MixedGroup& carrier, const MixedElement& a,
                                   const MixedElement& b, const std::vector<Row>& generic,
                                   int generic_rank) {
  std::set<Prime> out;
  for (const PadicBlock& blk : carrier.blocks()) out.insert(blk.p);
  for (const MixedElement* e : {&a, &b}) {
    for (const auto& [key, value] : e->rational.coords()) {
      for (const auto& [p, h] : carrier.rational().summands().at(key.summand).chi.exceptions()) {
        out.insert(p);
      }
      add_primes(out, value.get_num());
      add_primes(out, value.get_den());
    }
  }
  if (generic_rank == 2) {
    // Primes where the generic rows become dependent mod p.
    std::vector<std::pair<Integer, Integer>> cleared;
    for (const Row& r : generic) {
      Integer den;
      mpz_lcm(den.get_mpz_t(), r.first.get_den_mpz_t(), r.second.get_den_mpz_t());
      cleared.emplace_back(Rational(r.first * den).get_num(), Rational(r.second * den).get_num());
    }
    Integer g = 0;
    for (std::size_t i = 0; i < cleared.size(); ++i) {
      for (std::size_t j = i + 1; j < cleared.size(); ++j) {
        g = gcd(g, cleared[i].first * cleared[j].second - cleared[i].second * cleared[j].first);
      }
    }
    add_primes(out, g);
  }
  return out;
}

PrimeLocalType generic_default(int generic_rank, const std::vector<Row>& generic) {
  if (generic_rank == 2) return IndepFinite{0, 0};
  if (generic_rank == 0) return IndepWithInfinite{ExtHeight::inf(), ExtHeight::inf()};
  bool a_zero = std::all_of(generic.begin(), generic.end(),
                            [](const Row& r) { return r.first == 0; });
  bool b_zero = std::all_of(generic.begin(), generic.end(),
                            [](const Row& r) { return r.second == 0; });
  if (a_zero) return IndepWithInfinite{ExtHeight::inf(), ExtHeight(0)};
  if (b_zero) return IndepWithInfinite{ExtHeight(0), ExtHeight::inf()};
  fail(ErrorCode::kPreconditionViolated,
       "a combination of the witnesses is divisible at almost all primes; rebase first");
}

// Independence of x and y over Z, read from the coordinates.
bool independent(const MixedElement& x, const MixedElement& y) {
  std::vector<Row> rows;
  std::set<CoordKey> keys;
  for (const auto& [k, v] : x.rational.coords()) keys.insert(k);
  for (const auto& [k, v] : y.rational.coords()) keys.insert(k);
  for (const CoordKey& k : keys) rows.emplace_back(x.rational.get(k), y.rational.get(k));
  TwoColumnRank r = two_column_rank(rows);
  if (r.rank == 2) return true;
  if (r.rank == 1) {
    MixedElement comb = combine(r.u, x, r.v, y);
    if (comb.padic.empty()) return false;
    for (const auto& [k, v] : comb.padic) {
      if (v.residue() != 0) return true;
    }
    fail(ErrorCode::kIndeterminateAtPrecision,
         "the only rational relation vanishes on the p-adic part at this precision");
  }
  // Purely p-adic pair: a 2x2 minor that is nonzero mod p^N rules out every
  // primitive relation, since one of its coefficients is a unit.
  std::map<Prime, std::vector<std::pair<Integer, Integer>>> by_prime;
  std::map<Prime, Integer> modulus;
  std::set<CoordKey> pkeys;
  for (const auto& [k, v] : x.padic) pkeys.insert(k);
  for (const auto& [k, v] : y.padic) pkeys.insert(k);
  for (const CoordKey& k : pkeys) {
    auto ix = x.padic.find(k);
    auto iy = y.padic.find(k);
    const TruncatedPAdic& any = ix != x.padic.end() ? ix->second : iy->second;
    Integer rx = ix != x.padic.end() ? ix->second.residue() : Integer(0);
    Integer ry = iy != y.padic.end() ? iy->second.residue() : Integer(0);
    by_prime[any.prime()].emplace_back(rx, ry);
    Integer m = any.modulus();
    auto [it, fresh] = modulus.emplace(any.prime(), m);
    if (!fresh && m < it->second) it->second = m;
  }
  for (const auto& [p, rows_p] : by_prime) {
    for (std::size_t i = 0; i < rows_p.size(); ++i) {
      for (std::size_t j = i + 1; j < rows_p.size(); ++j) {
        Integer det = rows_p[i].first * rows_p[j].second - rows_p[i].second * rows_p[j].first;
        if (!mpz_divisible_p(det.get_mpz_t(), modulus.at(p).get_mpz_t())) return true;
      }
    }
  }
  fail(ErrorCode::kIndeterminateAtPrecision, "cannot certify independence of a p-adic pair");
}

bool swapped_at_equal_heights(const SplitInfinite& s) { return s.k == s.l && s.swapped; }

}  // namespace

std::string case_name(const PrimeLocalType& t) {
  struct Visitor {
    std::string operator()(const IndepWithInfinite&) const { return "indep_infinite"; }
    std::string operator()(const IndepFinite&) const { return "indep_finite"; }
    std::string operator()(const SplitInfinite&) const { return "split_infinite"; }
    std::string operator()(const LadderLocal& l) const {
      return l.ladder.infinite ? "infinite_ladder" : "finite_ladder";
    }
  };
  return std::visit(Visitor{}, t);
}

PrimeLocalType TwoType::at(Prime p) const {
  auto it = locals.find(p);
  return it == locals.end() ? default_local : it->second;
}

std::vector<std::string> two_type_violations(const TwoType& tt) {
  std::vector<std::string> out;
  if (tt.rank != 1 && tt.rank != 2) {
    out.push_back("rank must be 1 or 2");
    return out;
  }
  const auto width = static_cast<std::size_t>(tt.rank);
  if (tt.expression.size() != 2 || tt.expression[0].size() != width ||
      tt.expression[1].size() != width) {
    out.push_back("expression must be a 2 x rank matrix");
    return out;
  }
  if (tt.rank == 1) {
    if (!tt.char_single) out.push_back("rank 1 needs a characteristic");
    if (tt.expression[0][0] == 0 || tt.expression[1][0] == 0) {
      out.push_back("expression makes x or y zero");
    }
    if (!tt.locals.empty()) out.push_back("rank 1 carries no local data");
    return out;
  }
  if (tt.char_single) out.push_back("rank 2 carries no single characteristic");
  const IntegerMatrix& m = tt.expression;
  if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) {
    out.push_back("expression is singular");
  }

  if (const auto* d = std::get_if<IndepFinite>(&tt.default_local)) {
    if (d->k != 0 || d->l != 0) out.push_back("default must be indep_finite(0, 0)");
  } else if (const auto* d = std::get_if<IndepWithInfinite>(&tt.default_local)) {
    auto ok = [](ExtHeight h) { return h.is_inf() || h.value() == 0; };
    if (!(d->a.is_inf() || d->b.is_inf()) || !ok(d->a) || !ok(d->b)) {
      out.push_back("default indep_infinite needs heights in {0, inf}, one of them inf");
    }
  } else {
    out.push_back("default must be indep_finite(0, 0) or indep_infinite");
  }

  for (const auto& [p, local] : tt.locals) {
    const std::string at = "p = " + std::to_string(p) + ": ";
    if (!is_prime(p)) {
      out.push_back(at + "not a prime");
      continue;
    }
    if (const auto* c = std::get_if<IndepWithInfinite>(&local)) {
      if (!c->a.is_inf() && !c->b.is_inf()) out.push_back(at + "no infinite height");
    } else if (const auto* c = std::get_if<SplitInfinite>(&local)) {
      if (c->k > c->l) out.push_back(at + "k > l");
      if (c->alpha == 0 || c->beta == 0 || gcd(c->alpha, c->beta) != 1) {
        out.push_back(at + "alpha, beta must be nonzero and coprime");
      } else {
        Integer ab = c->alpha * c->beta;
        if (mpz_divisible_ui_p(ab.get_mpz_t(), p)) out.push_back(at + "p divides alpha beta");
      }
      if (c->alpha < 0) out.push_back(at + "alpha must be positive");
    } else if (const auto* c = std::get_if<LadderLocal>(&local)) {
      if (c->ladder.p != p) out.push_back(at + "ladder over another prime");
      if (c->ladder.steps.empty()) out.push_back(at + "empty ladder");
      for (const std::string& v : ladder_violations(c->ladder)) out.push_back(at + v);
    }
  }
  return out;
}

bool same_up_to_precision(const TwoType& x, const TwoType& y) {
  if (x.rank != y.rank || x.char_single != y.char_single || x.expression != y.expression ||
      x.default_local != y.default_local || x.locals.size() != y.locals.size()) {
    return false;
  }
  for (const auto& [p, lx] : x.locals) {
    auto it = y.locals.find(p);
    if (it == y.locals.end()) return false;
    const auto* ax = std::get_if<LadderLocal>(&lx);
    const auto* ay = std::get_if<LadderLocal>(&it->second);
    if (ax != nullptr && ay != nullptr) {
      if (ax->swapped != ay->swapped || ax->ladder.infinite != ay->ladder.infinite ||
          !ladder_prefix_compatible(ax->ladder, ay->ladder)) {
        return false;
      }
    } else if (lx != it->second) {
      return false;
    }
  }
  return true;
}

bool validate_two_type(const TwoType& tt) { return two_type_violations(tt).empty(); }

TwoType canonicalize(const TwoType& tt, std::uint64_t precision) {
  TwoType out = tt;
  out.locals.clear();
  for (const auto& [p, local] : tt.locals) {
    PrimeLocalType v = local;
    if (auto* c = std::get_if<LadderLocal>(&v)) {
      c->ladder = canonical_ladder(c->ladder, precision);
      if (c->ladder.steps.empty() && !c->ladder.infinite) {
        v = c->swapped ? IndepFinite{c->ladder.l, c->ladder.k}
                       : IndepFinite{c->ladder.k, c->ladder.l};
      }
    } else if (auto* s = std::get_if<SplitInfinite>(&v)) {
      if (swapped_at_equal_heights(*s)) {
        // alpha b + beta a has infinite height; rewrite as u a + v b, u > 0.
        Integer u = s->beta;
        Integer w = s->alpha;
        if (u < 0) {
          u = -u;
          w = -w;
        }
        *s = SplitInfinite{s->k, s->l, u, w, false};
      }
    }
    if (v != out.default_local) out.locals.emplace(p, v);
  }
  return out;
}

PrimeLocalType classify_at(const MixedGroup& carrier, const MixedElement& a,
                           const MixedElement& b, Prime p) {
  require_prime(p);
  const ExtHeight ha = to_ext(mixed_height(carrier, a, p));
  const ExtHeight hb = to_ext(mixed_height(carrier, b, p));
  if (ha.is_inf() || hb.is_inf()) return IndepWithInfinite{ha, hb};

  const bool swapped = ha > hb;
  const MixedElement& low = swapped ? b : a;
  const MixedElement& high = swapped ? a : b;
  const std::uint64_t k = std::min(ha, hb).value();
  const std::uint64_t l = std::max(ha, hb).value();
  const bool padic = has_padic_at(a, p) || has_padic_at(b, p);

  if (!padic) {
    std::vector<Row> rows = rational_rows(
        carrier.rational(), low.rational, high.rational,
        [p](const Characteristic& chi) { return chi.at(p).is_finite(); });
    TwoColumnRank r = two_column_rank(rows);
    if (r.rank == 1) {
      // u low + v high vanishes at every coordinate finite at p; then
      // u = alpha p^(l-k) with p not dividing alpha or v.
      const Integer lift = power(p, l - k);
      if (r.u == 0 || !mpz_divisible_p(r.u.get_mpz_t(), lift.get_mpz_t())) {
        fail(ErrorCode::kPreconditionViolated, "infinite-height combination of unexpected shape");
      }
      return SplitInfinite{k, l, r.u / lift, r.v, swapped};
    }
  }

  const std::uint64_t n = precision_at(carrier, p);
  const std::uint64_t max_level = padic ? n - 1 : std::numeric_limits<std::uint64_t>::max();
  const Integer lift = power(p, l - k);
  auto height = [&](const Integer& u, const Integer& v) {
    return mixed_height(carrier, combine(u * lift, low, v, high), p);
  };
  Extraction ex = extract_ladder_with(p, k, l, height, max_level);
  if (ex.end == LadderEnd::kInfiniteCombination) {
    fail(ErrorCode::kPreconditionViolated, "infinite-height combination missed");
  }
  if (ex.ladder.steps.empty()) {
    if (ex.end == LadderEnd::kTruncated) {
      fail(ErrorCode::kIndeterminateAtPrecision,
           "a combination vanishes to the working precision at p = " + std::to_string(p));
    }
    return IndepFinite{ha.value(), hb.value()};
  }
  return LadderLocal{ex.ladder, swapped};
}

TwoType classify_witnesses(const MixedGroup& carrier, const MixedElement& a,
                           const MixedElement& b, const IntegerMatrix& expression) {
  validate_element(carrier, a);
  validate_element(carrier, b);
  std::vector<Row> generic = generic_rows(carrier.rational(), a.rational, b.rational);
  const int generic_rank = two_column_rank(generic).rank;
  TwoType tt;
  tt.rank = 2;
  tt.expression = expression;
  tt.default_local = generic_default(generic_rank, generic);
  for (Prime p : exceptional_primes(carrier, a, b, generic, generic_rank)) {
    PrimeLocalType local = classify_at(carrier, a, b, p);
    if (local != tt.default_local) tt.locals.emplace(p, local);
  }
  return tt;
}

TwoType classify_pair(const MixedGroup& carrier, const MixedElement& x, const MixedElement& y) {
  validate_element(carrier, x);
  validate_element(carrier, y);
  if (x.is_zero() || y.is_zero()) fail(ErrorCode::kZeroElement, "classify_pair needs x, y != 0");

  if (!independent(x, y)) {
    ReductionResult red = reduce_tuple(carrier.rational(), {x.rational, y.rational});
    TwoType tt;
    tt.rank = 1;
    tt.char_single = elem_char(carrier.rational(), red.basis.at(0));
    tt.expression = {{red.expression[0][0]}, {red.expression[1][0]}};
    return tt;
  }

  std::vector<Row> generic = generic_rows(carrier.rational(), x.rational, y.rational);
  TwoColumnRank g = two_column_rank(generic);
  if (g.rank != 1) return classify_witnesses(carrier, x, y, {{1, 0}, {0, 1}});

  // c = u x + v y vanishes on the generic rows; complete to a unimodular
  // basis (c, d) with d = s x + t y, u t - v s = 1.
  Bezout bz = bezout(g.u, g.v);
  const Integer t = bz.x;
  const Integer s = -bz.y;
  MixedElement c = combine(g.u, x, g.v, y);
  MixedElement d = combine(s, x, t, y);
  IntegerMatrix m = {{t, -g.v}, {-s, g.u}};
  return classify_witnesses(carrier, c, d, m);
}

Realization realize_two_type(const TwoType& tt, std::uint64_t precision) {
  auto bad = two_type_violations(tt);
  if (!bad.empty()) fail(ErrorCode::kInvalidTwoType, bad.front());
  Realization out;

  if (tt.rank == 1) {
    out.carrier = MixedGroup(FDGroup({Summand{*tt.char_single, Cardinal(1)}}));
    out.a.rational.set({0, 0}, 1);
    out.x = scale(tt.expression[0][0], out.a);
    out.y = scale(tt.expression[1][0], out.a);
    return out;
  }

  std::vector<Summand> summands;
  std::vector<PadicBlock> blocks;
  MixedElement a;
  MixedElement b;
  auto add_summand = [&](const Characteristic& chi, std::uint64_t mult) {
    summands.push_back(Summand{chi, Cardinal(mult)});
    return summands.size() - 1;
  };

  // Q + Q keeps the witnesses independent without touching any height.
  std::size_t q = add_summand(Characteristic::infinite(), 2);
  a.rational.set({q, 0}, 1);
  b.rational.set({q, 1}, 1);

  std::map<Prime, ExtHeight> inf_at;
  for (const auto& [p, local] : tt.locals) inf_at.emplace(p, ExtHeight::inf());
  const Characteristic generic = Characteristic::normalized(Default::kZero, inf_at);
  if (std::holds_alternative<IndepFinite>(tt.default_local)) {
    std::size_t s = add_summand(generic, 2);
    a.rational.set({s, 0}, 1);
    b.rational.set({s, 1}, 1);
  } else {
    const auto& d = std::get<IndepWithInfinite>(tt.default_local);
    if (!d.a.is_inf()) a.rational.set({add_summand(generic, 1), 0}, 1);
    if (!d.b.is_inf()) b.rational.set({add_summand(generic, 1), 0}, 1);
  }

  for (const auto& [p, local] : tt.locals) {
    const Characteristic only_p = Characteristic::normalized(Default::kInf, {{p, ExtHeight(0)}});
    if (const auto* c = std::get_if<IndepFinite>(&local)) {
      std::size_t s = add_summand(only_p, 2);
      a.rational.set({s, 0}, Rational(power(p, c->k)));
      b.rational.set({s, 1}, Rational(power(p, c->l)));
    } else if (const auto* c = std::get_if<IndepWithInfinite>(&local)) {
      if (!c->a.is_inf()) a.rational.set({add_summand(only_p, 1), 0}, Rational(power(p, c->a.value())));
      if (!c->b.is_inf()) b.rational.set({add_summand(only_p, 1), 0}, Rational(power(p, c->b.value())));
    } else if (const auto* c = std::get_if<SplitInfinite>(&local)) {
      // low = gamma p^(l-k) c - beta d, high = alpha p^(l-k) d - delta p^(l-k) c
      // with h_p(c) = inf and d = p^k of height k.
      auto [gamma, delta] = split_coefficients(c->alpha, c->beta, p, c->l - c->k);
      const Integer lift = power(p, c->l - c->k);
      std::size_t sc = add_summand(Characteristic::infinite(), 1);
      std::size_t sd = add_summand(only_p, 1);
      MixedElement& low = c->swapped ? b : a;
      MixedElement& high = c->swapped ? a : b;
      low.rational.set({sc, 0}, Rational(gamma * lift));
      low.rational.set({sd, 0}, Rational(-c->beta * power(p, c->k)));
      high.rational.set({sc, 0}, Rational(-delta * lift));
      high.rational.set({sd, 0}, Rational(c->alpha * power(p, c->l)));
    } else {
      const auto& lad = std::get<LadderLocal>(local);
      RealizedPair pair = realize_ladder(lad.ladder, precision);
      blocks.push_back(PadicBlock{p, precision, pair.a.size()});
      const std::size_t blk = blocks.size() - 1;
      MixedElement& low = lad.swapped ? b : a;
      MixedElement& high = lad.swapped ? a : b;
      for (std::size_t i = 0; i < pair.a.size(); ++i) {
        low.padic.emplace(CoordKey{blk, i}, pair.a[i]);
        high.padic.emplace(CoordKey{blk, i}, pair.b[i]);
      }
    }
  }

  out.carrier = MixedGroup(std::move(blocks), FDGroup(std::move(summands)));
  const IntegerMatrix& m = tt.expression;
  out.x = combine(m[0][0], a, m[0][1], b);
  out.y = combine(m[1][0], a, m[1][1], b);
  out.a = std::move(a);
  out.b = std::move(b);
  return out;
}

}  // namespace tfab
