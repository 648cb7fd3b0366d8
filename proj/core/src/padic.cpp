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

#include "tfab/padic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "tfab/error.hpp"

namespace tfab {

bool Height::exceeds(std::uint64_t level) const {
  switch (kind_) {
    case Kind::kInfinite: return true;
    case Kind::kExact: return value_ > level;
    case Kind::kAtLeast: return value_ > level;
  }
  return false;
}

Height min(Height a, Height b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_exact() && b.is_exact()) return a.value_ <= b.value_ ? a : b;
  if (a.is_at_least() && b.is_at_least()) return a.value_ <= b.value_ ? a : b;
  const Height& ex = a.is_exact() ? a : b;
  const Height& al = a.is_exact() ? b : a;
  // An exact value below the bound decides the minimum; otherwise only the
  // bound is known.
  return ex.value_ < al.value_ ? ex : al;
}

std::string Height::to_string() const {
  switch (kind_) {
    case Kind::kInfinite: return "inf";
    case Kind::kExact: return std::to_string(value_);
    case Kind::kAtLeast: return ">=" + std::to_string(value_);
  }
  return "?";
}

TruncatedPAdic::TruncatedPAdic(Prime p, std::uint64_t precision, const Integer& value)
    : p_(p), n_(precision) {
  require_prime(p);
  if (precision == 0) fail(ErrorCode::kInsufficientPrecision, "precision must be positive");
  Integer m = power(p, precision);
  mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
}

PadicValuation TruncatedPAdic::valuation() const {
  if (residue_ == 0) return Height::at_least(n_);
  return Height::exact(tfab::valuation(residue_, p_));
}

void TruncatedPAdic::check_compatible(const TruncatedPAdic& o) const {
  if (p_ != o.p_) fail(ErrorCode::kMixedPrime, "operands over different primes");
  if (n_ != o.n_) fail(ErrorCode::kMixedPrecision, "operands at different precisions");
}

TruncatedPAdic TruncatedPAdic::operator+(const TruncatedPAdic& o) const {
  check_compatible(o);
  return TruncatedPAdic(p_, n_, residue_ + o.residue_);
}

TruncatedPAdic TruncatedPAdic::operator-(const TruncatedPAdic& o) const {
  check_compatible(o);
  return TruncatedPAdic(p_, n_, residue_ - o.residue_);
}

TruncatedPAdic TruncatedPAdic::scale(const Integer& s) const {
  return TruncatedPAdic(p_, n_, residue_ * s);
}

std::vector<std::uint64_t> TruncatedPAdic::digits() const {
  std::vector<std::uint64_t> out;
  Integer r = residue_;
  for (std::uint64_t i = 0; i < n_; ++i) {
    out.push_back(mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), p_));
  }
  return out;
}

PadicValuation vector_valuation(const PadicVector& x) {
  if (x.empty()) fail(ErrorCode::kZeroElement, "empty p-adic vector");
  Height h = Height::infinite();
  for (const TruncatedPAdic& c : x) h = min(h, c.valuation());
  return h;
}

PadicVector combine(const Integer& u, const PadicVector& x, const Integer& v,
                    const PadicVector& y) {
  if (x.size() != y.size()) fail(ErrorCode::kMixedPrecision, "vectors of different length");
  PadicVector out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i].scale(u) + y[i].scale(v));
  return out;
}

std::pair<Integer, Integer> accumulated(const Ladder& ladder, std::size_t count) {
  Integer a = 0;
  Integer b = 0;
  std::uint64_t shift = 0;
  for (std::size_t i = 0; i < count && i < ladder.steps.size(); ++i) {
    Integer scale = power(ladder.p, shift);
    a += scale * ladder.steps[i].alpha;
    b += scale * ladder.steps[i].beta;
    shift = ladder.steps[i].t - ladder.l;
  }
  return {a, b};
}

std::vector<std::string> ladder_violations(const Ladder& ladder) {
  std::vector<std::string> out;
  const Prime p = ladder.p;
  if (!is_prime(p)) {
    out.push_back("p = " + std::to_string(p) + " is not prime");
    return out;
  }
  if (ladder.k > ladder.l) out.push_back("k > l");
  if (ladder.infinite && ladder.steps.empty()) out.push_back("infinite ladder without steps");
  for (std::size_t i = 0; i < ladder.steps.size(); ++i) {
    const LadderStep& s = ladder.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    std::uint64_t prev = i == 0 ? ladder.l : ladder.steps[i - 1].t;
    if (s.t <= prev) {
      out.push_back(at + "t = " + std::to_string(s.t) + " does not exceed " +
                    std::to_string(prev));
    }
    if (i == 0) {
      if (s.alpha == 0 || s.alpha >= p || s.beta == 0 || s.beta >= p) {
        out.push_back(at + "pair not in (0, p)");
      } else if (std::gcd(s.alpha, s.beta) != 1) {
        out.push_back(at + "pair not coprime");
      }
      continue;
    }
    if (s.alpha >= p || s.beta >= p) {
      out.push_back(at + "pair not in [0, p)");
      continue;
    }
    if (s.alpha == 0 && s.beta == 0) {
      out.push_back(at + "zero pair");
      continue;
    }
    auto [a, b] = accumulated(ladder, i);
    Integer det = Integer(s.alpha) * b - Integer(s.beta) * a;
    if (mpz_divisible_ui_p(det.get_mpz_t(), p)) {
      out.push_back(at + "pair proportional mod p to the accumulated pair");
    }
  }
  return out;
}

void validate_ladder(const Ladder& ladder) {
  auto v = ladder_violations(ladder);
  if (!v.empty()) fail(ErrorCode::kInvalidLadder, v.front());
}

bool ladder_prefix_compatible(const Ladder& x, const Ladder& y) {
  if (x.p != y.p || x.k != y.k || x.l != y.l) return false;
  if (!x.infinite && !y.infinite) return x.steps == y.steps;
  const Ladder& shorter = x.steps.size() <= y.steps.size() ? x : y;
  const Ladder& longer = x.steps.size() <= y.steps.size() ? y : x;
  // A finite ladder can only be the longer side of the comparison.
  if (!shorter.infinite) return x.steps == y.steps;
  return std::equal(shorter.steps.begin(), shorter.steps.end(), longer.steps.begin());
}

RealizedPair realize_ladder(const Ladder& ladder, std::uint64_t precision) {
  validate_ladder(ladder);
  const Prime p = ladder.p;
  if (ladder.steps.empty()) {
    if (precision <= ladder.l) {
      fail(ErrorCode::kInsufficientPrecision, "precision must exceed l");
    }
    return {{TruncatedPAdic(p, precision, power(p, ladder.k)), TruncatedPAdic(p, precision, 0)},
            {TruncatedPAdic(p, precision, 0), TruncatedPAdic(p, precision, power(p, ladder.l))}};
  }
  const std::uint64_t last = ladder.steps.back().t;
  if (precision <= last + 1) {
    fail(ErrorCode::kInsufficientPrecision,
         "precision " + std::to_string(precision) + " must exceed " + std::to_string(last + 1));
  }
  // Digit by digit: after step i the pair (a, b) agrees with (B_i, -A_i) on
  // the first t_i - l digits, so c_i vanishes to exactly that depth. The
  // closing digit p^(t_n - l) on a blocks the last combination at t_n.
  auto [big_a, big_b] = accumulated(ladder, ladder.steps.size());
  const Integer tail = power(p, last - ladder.l);
  const Integer a0 = big_b + tail;
  const Integer b0 = -big_a;
  const Integer lift_a = power(p, ladder.k);
  const Integer lift_b = power(p, ladder.l);

  RealizedPair out;
  out.a.emplace_back(p, precision, lift_a * a0);
  out.b.emplace_back(p, precision, lift_b * b0);
  if (!ladder.infinite) {
    // Second copy: b carries p^(t_n), capping every combination at t_n.
    out.a.emplace_back(p, precision, 0);
    out.b.emplace_back(p, precision, lift_b * tail);
  }
  return out;
}

Extraction extract_ladder_with(Prime p, std::uint64_t k, std::uint64_t l,
                               const CombinationHeight& height,
                               std::uint64_t max_level) {
  require_prime(p);
  Extraction result;
  result.ladder.p = p;
  result.ladder.k = k;
  result.ladder.l = l;

  Integer acc_a = 0;
  Integer acc_b = 0;
  std::uint64_t level = l;
  for (;;) {
    const bool first = result.ladder.steps.empty();
    const Integer shift = first ? Integer(1) : power(p, level - l);
    bool found = false;
    LadderStep step;
    Height reached = Height::infinite();
    const std::uint64_t alpha_end = first ? std::min<std::uint64_t>(p, 2) : p;
    for (std::uint64_t alpha = 0; alpha < alpha_end && !found; ++alpha) {
      for (std::uint64_t beta = 0; beta < p && !found; ++beta) {
        // Scaling by a unit keeps the height, so the lexicographically first
        // raising pair of the first level has alpha = 1.
        if (first && (alpha != 1 || beta == 0)) continue;
        if (!first && alpha == 0 && beta == 0) continue;
        Height h = height(acc_a + shift * alpha, acc_b + shift * beta);
        if (!h.exceeds(level)) {
          if (h.is_at_least()) {
            fail(ErrorCode::kIndeterminateAtPrecision,
                 "combination vanishes below level " + std::to_string(level));
          }
          continue;
        }
        found = true;
        step.alpha = alpha;
        step.beta = beta;
        reached = h;
      }
    }
    if (!found) {
      result.end = LadderEnd::kTerminated;
      return result;
    }
    if (reached.is_infinite()) {
      result.end = LadderEnd::kInfiniteCombination;
      return result;
    }
    if (reached.is_at_least()) {
      if (reached.value() <= max_level) {
        fail(ErrorCode::kIndeterminateAtPrecision,
             "height of a combination is only known to be >= " +
                 std::to_string(reached.value()));
      }
      result.end = LadderEnd::kTruncated;
      result.ladder.infinite = true;
      return result;
    }
    if (reached.value() > max_level) {
      result.end = LadderEnd::kTruncated;
      result.ladder.infinite = true;
      return result;
    }
    step.t = reached.value();
    acc_a += shift * step.alpha;
    acc_b += shift * step.beta;
    level = step.t;
    result.ladder.steps.push_back(step);
  }
}

namespace {

void require_exact(const PadicValuation& v, const char* what) {
  if (!v.is_exact()) {
    fail(ErrorCode::kPreconditionViolated, std::string(what) + " has no exact valuation");
  }
}

}  // namespace

Ladder extract_ladder(const PadicVector& a, const PadicVector& b, std::uint64_t max_level) {
  if (a.empty() || b.empty()) fail(ErrorCode::kZeroElement, "empty p-adic vector");
  const Prime p = a.front().prime();
  const std::uint64_t n = a.front().precision();
  if (max_level >= n) {
    fail(ErrorCode::kPreconditionViolated, "max_level must be below the precision");
  }
  PadicValuation va = vector_valuation(a);
  PadicValuation vb = vector_valuation(b);
  require_exact(va, "a");
  require_exact(vb, "b");
  if (va.value() > vb.value()) {
    fail(ErrorCode::kPreconditionViolated, "expected v(a) <= v(b)");
  }
  const std::uint64_t k = va.value();
  const std::uint64_t l = vb.value();
  const Integer lift = power(p, l - k);
  auto height = [&](const Integer& u, const Integer& v) {
    return vector_valuation(combine(u * lift, a, v, b));
  };
  return extract_ladder_with(p, k, l, height, max_level).ladder;
}

Ladder canonical_ladder(const Ladder& ladder, std::uint64_t precision) {
  validate_ladder(ladder);
  if (ladder.steps.empty()) return ladder;
  const Prime p = ladder.p;
  const std::uint64_t l = ladder.l;
  const std::uint64_t cap = ladder.steps.back().t - l;
  auto [big_a, big_b] = accumulated(ladder, ladder.steps.size());
  if (precision <= ladder.steps.back().t + 1) {
    fail(ErrorCode::kInsufficientPrecision, "precision too small for the ladder");
  }

  CombinationHeight height;
  if (!ladder.infinite) {
    // Primitive combinations of the realized pair vanish to the depth at
    // which (u : v) agrees with (A_n : B_n), capped at t_n.
    height = [=](const Integer& u, const Integer& v) {
      Integer w = u * big_b - v * big_a;
      std::uint64_t depth = w == 0 ? cap : std::min<std::uint64_t>(valuation(w, p), cap);
      return Height::exact(l + depth);
    };
  } else {
    const Integer b_star = big_b + power(p, cap);
    height = [=](const Integer& u, const Integer& v) {
      Integer w = u * b_star - v * big_a;
      if (w == 0) return Height::at_least(precision);
      std::uint64_t h = l + valuation(w, p);
      return h >= precision ? Height::at_least(precision) : Height::exact(h);
    };
  }
  return extract_ladder_with(p, ladder.k, l, height, precision - 1).ladder;
}

UniquenessReport check_unique_dependency(const PadicVector& a, const PadicVector& b,
                                         std::uint64_t level) {
  if (a.empty() || b.empty()) fail(ErrorCode::kZeroElement, "empty p-adic vector");
  UniquenessReport report;
  report.p = a.front().prime();
  report.level = level;
  PadicValuation va = vector_valuation(a);
  PadicValuation vb = vector_valuation(b);
  require_exact(va, "a");
  require_exact(vb, "b");
  const PadicVector* low = &a;
  const PadicVector* high = &b;
  if (va.value() > vb.value()) {
    std::swap(low, high);
    std::swap(va, vb);
    report.swapped = true;
  }
  report.k = va.value();
  report.l = vb.value();
  if (level < report.l) {
    fail(ErrorCode::kPreconditionViolated, "level must be at least l");
  }
  const Prime p = report.p;
  const Integer lift = power(p, report.l - report.k);
  std::set<std::uint64_t> classes;
  for (std::uint64_t alpha = 1; alpha < p; ++alpha) {
    for (std::uint64_t beta = 1; beta < p; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      Height h = vector_valuation(combine(lift * alpha, *low, Integer(beta), *high));
      if (h.is_at_least() && h.value() <= level) {
        report.indeterminate.emplace_back(alpha, beta);
        continue;
      }
      if (!h.exceeds(level)) continue;
      Integer inv;
      Integer pm(p);
      mpz_invert(inv.get_mpz_t(), Integer(beta).get_mpz_t(), pm.get_mpz_t());
      Integer cls = (inv * alpha) % pm;
      RaisingPair rp{alpha, beta, h, cls.get_ui()};
      report.raising.push_back(rp);
      classes.insert(rp.projective_class);
    }
  }
  report.classes = classes.size();
  report.pass = report.classes <= 1;
  return report;
}

MixedGroup::MixedGroup(std::vector<PadicBlock> blocks, FDGroup rational)
    : blocks_(std::move(blocks)), rational_(std::move(rational)) {
  for (const PadicBlock& b : blocks_) {
    require_prime(b.p);
    if (b.precision == 0) fail(ErrorCode::kInsufficientPrecision, "block precision is zero");
    if (b.copies == 0) fail(ErrorCode::kSemanticError, "block without copies");
  }
}

bool MixedGroup::has_block_at(Prime p) const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [p](const PadicBlock& b) { return b.p == p; });
}

void validate_element(const MixedGroup& group, const MixedElement& x) {
  for (const auto& [key, value] : x.padic) {
    if (key.summand >= group.blocks().size()) {
      fail(ErrorCode::kOutOfRange, "p-adic block index " + std::to_string(key.summand));
    }
    const PadicBlock& b = group.blocks()[key.summand];
    if (key.copy >= b.copies) {
      fail(ErrorCode::kOutOfRange, "p-adic copy index " + std::to_string(key.copy));
    }
    if (value.prime() != b.p) fail(ErrorCode::kMixedPrime, "coordinate over the wrong prime");
    if (value.precision() != b.precision) {
      fail(ErrorCode::kMixedPrecision, "coordinate at the wrong precision");
    }
  }
  validate_element(group.rational(), x.rational);
}

MixedElement combine(const Integer& u, const MixedElement& x, const Integer& v,
                     const MixedElement& y) {
  MixedElement out;
  out.rational = Rational(u) * x.rational + Rational(v) * y.rational;
  if (u != 0) {
    for (const auto& [key, value] : x.padic) out.padic.emplace(key, value.scale(u));
  }
  for (const auto& [key, value] : y.padic) {
    if (v == 0) break;
    auto it = out.padic.find(key);
    if (it == out.padic.end()) {
      out.padic.emplace(key, value.scale(v));
    } else {
      it->second = it->second + value.scale(v);
    }
  }
  return out;
}

MixedElement scale(const Integer& u, const MixedElement& x) {
  return combine(u, x, Integer(0), MixedElement());
}

MixedElement divide_by_prime_power(const MixedGroup& group, const MixedElement& x, Prime p,
                                   std::uint64_t e) {
  const Integer d = power(p, e);
  MixedElement out;
  for (const auto& [key, value] : x.padic) {
    if (value.prime() == p) {
      fail(ErrorCode::kIndeterminateAtPrecision,
           "cannot divide a truncated J_p coordinate by p exactly");
    }
    Integer inv;
    Integer m = value.modulus();
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    out.padic.emplace(key, value.scale(inv));
  }
  Rational inv(Integer(1), d);
  inv.canonicalize();
  out.rational = inv * x.rational;
  try {
    validate_element(group.rational(), out.rational);
  } catch (const Error& err) {
    fail(ErrorCode::kMembershipViolation, std::string("division leaves the group: ") + err.what());
  }
  return out;
}

Height mixed_height(const MixedGroup& group, const MixedElement& x, Prime p) {
  if (x.is_zero()) fail(ErrorCode::kZeroElement, "height of the zero element");
  Height h = Height::infinite();
  for (const auto& [key, value] : x.rational.coords()) {
    h = min(h, Height::from(height_rank1(
                   RationalGroup{group.rational().summands().at(key.summand).chi}, value, p)));
  }
  for (const auto& [key, value] : x.padic) {
    // J_q is p-divisible for q != p.
    if (value.prime() == p) h = min(h, value.valuation());
  }
  return h;
}

}  // namespace tfab
