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

#ifndef TFAB_CHARACTERISTIC_HPP_
#define TFAB_CHARACTERISTIC_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "tfab/numbers.hpp"

namespace tfab {

// A p-height: a natural number or infinity.
class ExtHeight {
 public:
  constexpr ExtHeight() = default;
  constexpr ExtHeight(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr ExtHeight inf() {
    ExtHeight h;
    h.inf_ = true;
    return h;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  // Only meaningful for finite heights.
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ExtHeight operator+(ExtHeight a, ExtHeight b) {
    if (a.inf_ || b.inf_) return inf();
    return ExtHeight(a.value_ + b.value_);
  }
  friend constexpr bool operator==(ExtHeight a, ExtHeight b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtHeight a, ExtHeight b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool inf_ = false;
};

// The value a characteristic takes at all primes it does not name.
enum class Default : std::uint8_t { kZero, kInf };

/// A finitely described height sequence: a default value (0 or infinity) with
/// finitely many exceptional primes. The exception map is kept minimal, so
/// two characteristics are equal exactly when their sequences are.
class Characteristic {
 public:
  Characteristic() = default;
  explicit Characteristic(Default d) : default_(d) {}

  // Validates primality and minimality; throws Error(kSemanticError) for a
  // redundant exception and Error(kNotAPrime) for a composite key.
  static Characteristic make(Default d, const std::map<Prime, ExtHeight>& exceptions);

  // Builds from arbitrary data, silently dropping exceptions equal to the
  // default value.
  static Characteristic normalized(Default d, const std::map<Prime, ExtHeight>& values);

  static Characteristic zero() { return Characteristic(Default::kZero); }
  static Characteristic infinite() { return Characteristic(Default::kInf); }

  Default default_class() const { return default_; }
  ExtHeight default_value() const {
    return default_ == Default::kZero ? ExtHeight(0) : ExtHeight::inf();
  }
  const std::map<Prime, ExtHeight>& exceptions() const { return exceptions_; }

  ExtHeight at(Prime p) const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;
  // Arbitrary total order used for containers, unrelated to the lattice order.
  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;

 private:
  Default default_ = Default::kZero;
  std::map<Prime, ExtHeight> exceptions_;
};

/// Canonical representative of an equivalence class of characteristics:
/// the default class plus the primes where the finite/infinite class flips.
class HType {
 public:
  HType() = default;
  HType(Default base, std::set<Prime> flips);

  Default base() const { return base_; }
  const std::set<Prime>& flips() const { return flips_; }

  // True when the characteristics of this class are infinite at p.
  bool infinite_at(Prime p) const;

  // The representative with 0 at every finite prime.
  Characteristic representative() const;

  friend bool operator==(const HType&, const HType&) = default;
  // Sort order for output: base first, then the flip set.
  friend auto operator<=>(const HType&, const HType&) = default;

 private:
  Default base_ = Default::kZero;
  std::set<Prime> flips_;
};

Characteristic char_meet(const Characteristic& x, const Characteristic& y);
Characteristic char_join(const Characteristic& x, const Characteristic& y);
bool char_leq(const Characteristic& x, const Characteristic& y);
bool char_equiv(const Characteristic& x, const Characteristic& y);

// Multiplies (delta > 0) or divides (delta < 0) by p^|delta|.
Characteristic char_shift(const Characteristic& x, Prime p, std::int64_t delta);

HType htype_of(const Characteristic& x);
HType htype_meet(const HType& s, const HType& t);
HType htype_join(const HType& s, const HType& t);
bool htype_leq(const HType& s, const HType& t);
inline bool htype_less(const HType& s, const HType& t) {
  return s != t && htype_leq(s, t);
}

}  // namespace tfab

#endif  // TFAB_CHARACTERISTIC_HPP_
