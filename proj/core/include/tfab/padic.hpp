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

#ifndef TFAB_PADIC_HPP_
#define TFAB_PADIC_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tfab/groups.hpp"
#include "tfab/numbers.hpp"

namespace tfab {

/// A height that may only be known up to the working precision: an exact
/// value, "at least N" for a combination that vanishes mod p^N, or infinity.
class Height {
 public:
  enum class Kind : std::uint8_t { kExact, kAtLeast, kInfinite };

  static Height exact(std::uint64_t k) { return Height(Kind::kExact, k); }
  static Height at_least(std::uint64_t n) { return Height(Kind::kAtLeast, n); }
  static Height infinite() { return Height(Kind::kInfinite, 0); }
  static Height from(ExtHeight h) { return h.is_inf() ? infinite() : exact(h.value()); }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::kExact; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_at_least() const { return kind_ == Kind::kAtLeast; }
  std::uint64_t value() const { return value_; }

  // True when every element consistent with the truncation has height > level.
  bool exceeds(std::uint64_t level) const;
  // True when the height is pinned down (exact or infinite).
  bool determinate() const { return kind_ != Kind::kAtLeast; }

  friend Height min(Height a, Height b);
  friend bool operator==(Height, Height) = default;

  std::string to_string() const;

 private:
  Height(Kind kind, std::uint64_t v) : kind_(kind), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

// Valuation of a residue: Exact(k) with k < N, or AtLeast(N) for residue 0.
using PadicValuation = Height;

/// Residue mod p^N of a p-adic integer.
class TruncatedPAdic {
 public:
  TruncatedPAdic(Prime p, std::uint64_t precision, const Integer& value);

  Prime prime() const { return p_; }
  std::uint64_t precision() const { return n_; }
  const Integer& residue() const { return residue_; }
  Integer modulus() const { return power(p_, n_); }

  PadicValuation valuation() const;

  TruncatedPAdic operator+(const TruncatedPAdic& o) const;
  TruncatedPAdic operator-(const TruncatedPAdic& o) const;
  TruncatedPAdic scale(const Integer& s) const;

  // Base-p digits, least significant first, exactly N of them.
  std::vector<std::uint64_t> digits() const;

  friend bool operator==(const TruncatedPAdic&, const TruncatedPAdic&) = default;

 private:
  void check_compatible(const TruncatedPAdic& o) const;
  Prime p_;
  std::uint64_t n_;
  Integer residue_;
};

// An element of a direct sum of copies of J_p, all at the same precision.
using PadicVector = std::vector<TruncatedPAdic>;

PadicValuation vector_valuation(const PadicVector& x);
PadicVector combine(const Integer& u, const PadicVector& x, const Integer& v,
                    const PadicVector& y);

struct LadderStep {
  std::uint64_t t = 0;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;

  friend bool operator==(const LadderStep&, const LadderStep&) = default;
};

/// Dependency ladder of a pair (a, b) with h_p(a) = k <= l = h_p(b): step i
/// records that c_i = A_i p^(l-k) a + B_i b has height t_i, where
/// A_i = alpha_1 + alpha_2 p^(t_1 - l) + ... + alpha_i p^(t_(i-1) - l) and B_i
/// likewise. `infinite` marks a finite prefix of an unbounded ladder.
struct Ladder {
  Prime p = 2;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::vector<LadderStep> steps;
  bool infinite = false;

  friend bool operator==(const Ladder&, const Ladder&) = default;
};

// Every violated ladder clause; empty for a valid ladder.
std::vector<std::string> ladder_violations(const Ladder& ladder);
void validate_ladder(const Ladder& ladder);

// (A_i, B_i) for i = 1..count (count = 0 gives (0, 0)).
std::pair<Integer, Integer> accumulated(const Ladder& ladder, std::size_t count);

// True when one ladder equals the other or, for truncated ladders, one is a
// prefix of the other.
bool ladder_prefix_compatible(const Ladder& x, const Ladder& y);

struct RealizedPair {
  PadicVector a;
  PadicVector b;
};

// a of height k and b of height l in J_p + J_p (one copy for infinite
// ladders) whose combinations follow the ladder.
RealizedPair realize_ladder(const Ladder& ladder, std::uint64_t precision);

// Height of u p^(l-k) a + v b for the pair being analysed.
using CombinationHeight = std::function<Height(const Integer& u, const Integer& v)>;

enum class LadderEnd : std::uint8_t {
  kTerminated,         // no combination raises the last level
  kTruncated,          // the next level lies beyond max_level
  kInfiniteCombination // some combination has infinite height
};

struct Extraction {
  Ladder ladder;
  LadderEnd end = LadderEnd::kTerminated;
};

// Greedy scan: first level over coprime (alpha, beta) in (0, p)^2, later
// levels over nonzero pairs in [0, p)^2, each in ascending lexicographic
// order; the first raising pair wins.
Extraction extract_ladder_with(Prime p, std::uint64_t k, std::uint64_t l,
                               const CombinationHeight& height,
                               std::uint64_t max_level);

Ladder extract_ladder(const PadicVector& a, const PadicVector& b, std::uint64_t max_level);

// The ladder extract_ladder finds on realize_ladder(ladder, precision),
// computed from the ladder's numbers alone.
Ladder canonical_ladder(const Ladder& ladder, std::uint64_t precision);

struct RaisingPair {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  Height height = Height::infinite();
  std::uint64_t projective_class = 0;  // alpha / beta mod p
};

struct UniquenessReport {
  Prime p = 2;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t level = 0;
  bool swapped = false;
  std::vector<RaisingPair> raising;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> indeterminate;
  std::size_t classes = 0;
  bool pass = true;
};

UniquenessReport check_unique_dependency(const PadicVector& a, const PadicVector& b,
                                         std::uint64_t level);

struct PadicBlock {
  Prime p = 2;
  std::uint64_t precision = 1;
  std::uint64_t copies = 1;

  friend bool operator==(const PadicBlock&, const PadicBlock&) = default;
};

/// (J_p)^copies blocks alongside a fully decomposable rational part.
class MixedGroup {
 public:
  MixedGroup() = default;
  MixedGroup(std::vector<PadicBlock> blocks, FDGroup rational);
  MixedGroup(const FDGroup& rational) : rational_(rational) {}  // NOLINT

  const std::vector<PadicBlock>& blocks() const { return blocks_; }
  const FDGroup& rational() const { return rational_; }
  bool has_block_at(Prime p) const;

  friend bool operator==(const MixedGroup&, const MixedGroup&) = default;

 private:
  std::vector<PadicBlock> blocks_;
  FDGroup rational_;
};

/// Element of a MixedGroup. A p-adic coordinate that is absent is exactly
/// zero; a present one is known modulo p^N only.
struct MixedElement {
  std::map<CoordKey, TruncatedPAdic> padic;
  Element rational;

  MixedElement() = default;
  MixedElement(Element r) : rational(std::move(r)) {}  // NOLINT

  bool is_zero() const { return padic.empty() && rational.is_zero(); }
  friend bool operator==(const MixedElement&, const MixedElement&) = default;
};

void validate_element(const MixedGroup& group, const MixedElement& x);

MixedElement combine(const Integer& u, const MixedElement& x, const Integer& v,
                     const MixedElement& y);
MixedElement scale(const Integer& u, const MixedElement& x);

// Exact division by p^e. Requires the element to have no J_p coordinate at
// this prime and every rational coordinate of the quotient to stay a member.
MixedElement divide_by_prime_power(const MixedGroup& group, const MixedElement& x, Prime p,
                                   std::uint64_t e);

Height mixed_height(const MixedGroup& group, const MixedElement& x, Prime p);

}  // namespace tfab

#endif  // TFAB_PADIC_HPP_
