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

#include "tfab/groups.hpp"

#include <algorithm>

#include "tfab/error.hpp"

namespace tfab {

bool member(const Rational& x, const RationalGroup& group) {
  if (x.get_den() == 1) return true;
  for (Prime p : prime_divisors(x.get_den())) {
    ExtHeight allowed = group.chi.at(p);
    if (allowed.is_finite() && valuation(x.get_den(), p) > allowed.value()) return false;
  }
  return true;
}

ExtHeight height_rank1(const RationalGroup& group, const Rational& x, Prime p) {
  require_prime(p);
  if (x == 0) fail(ErrorCode::kZeroElement, "height of the zero element");
  ExtHeight base = group.chi.at(p);
  if (base.is_inf()) return ExtHeight::inf();
  std::int64_t h = static_cast<std::int64_t>(base.value()) + valuation(x, p);
  if (h < 0) fail(ErrorCode::kMembershipViolation, x.get_str() + " is not a member");
  return ExtHeight(static_cast<std::uint64_t>(h));
}

Characteristic char_rank1(const RationalGroup& group, const Rational& x) {
  if (x == 0) fail(ErrorCode::kZeroElement, "characteristic of the zero element");
  std::map<Prime, ExtHeight> values = group.chi.exceptions();
  std::vector<Prime> primes = prime_divisors(x.get_num());
  std::vector<Prime> den = prime_divisors(x.get_den() == 1 ? Integer(1) : x.get_den());
  primes.insert(primes.end(), den.begin(), den.end());
  for (Prime p : primes) values[p] = height_rank1(group, x, p);
  return Characteristic::normalized(group.chi.default_class(), values);
}

FDGroup::FDGroup(std::vector<Summand> summands) : summands_(std::move(summands)) {
  for (const Summand& s : summands_) {
    if (s.multiplicity.is_zero()) {
      fail(ErrorCode::kSemanticError, "summand multiplicity must be positive");
    }
  }
}

Cardinal FDGroup::total_rank() const {
  Cardinal r;
  for (const Summand& s : summands_) r += s.multiplicity;
  return r;
}

FDGroup direct_sum(const FDGroup& a, const FDGroup& b) {
  std::vector<Summand> all = a.summands_;
  all.insert(all.end(), b.summands_.begin(), b.summands_.end());
  return FDGroup(std::move(all));
}

void Element::set(CoordKey key, const Rational& value) {
  if (value == 0) {
    coords_.erase(key);
  } else {
    coords_[key] = value;
  }
}

Rational Element::get(CoordKey key) const {
  auto it = coords_.find(key);
  return it == coords_.end() ? Rational(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [k, v] : o.coords_) set(k, get(k) + v);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [k, v] : o.coords_) set(k, get(k) - v);
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  if (s == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [k, v] : coords_) v *= s;
  return *this;
}

void validate_element(const FDGroup& group, const Element& a) {
  for (const auto& [key, value] : a.coords()) {
    if (key.summand >= group.size()) {
      fail(ErrorCode::kOutOfRange, "summand index " + std::to_string(key.summand));
    }
    const Summand& s = group.summands()[key.summand];
    if (!s.multiplicity.is_omega() && key.copy >= s.multiplicity.value()) {
      fail(ErrorCode::kOutOfRange, "copy index " + std::to_string(key.copy));
    }
    if (!member(value, RationalGroup{s.chi})) {
      fail(ErrorCode::kMembershipViolation,
           value.get_str() + " is not in summand " + std::to_string(key.summand));
    }
  }
}

bool is_member(const FDGroup& group, const Element& a) {
  try {
    validate_element(group, a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ExtHeight elem_height(const FDGroup& group, const Element& a, Prime p) {
  if (a.is_zero()) fail(ErrorCode::kZeroElement, "height of the zero element");
  ExtHeight h = ExtHeight::inf();
  for (const auto& [key, value] : a.coords()) {
    h = std::min(h, height_rank1(RationalGroup{group.summands().at(key.summand).chi},
                                 value, p));
  }
  return h;
}

Characteristic elem_char(const FDGroup& group, const Element& a) {
  if (a.is_zero()) fail(ErrorCode::kZeroElement, "characteristic of the zero element");
  Characteristic c = Characteristic::infinite();
  for (const auto& [key, value] : a.coords()) {
    c = char_meet(c, char_rank1(RationalGroup{group.summands().at(key.summand).chi}, value));
  }
  return c;
}

HType elem_htype(const FDGroup& group, const Element& a) {
  return htype_of(elem_char(group, a));
}

Cardinal SzmielewProfile::tf(Prime p) const {
  auto it = tf_exceptions.find(p);
  return it == tf_exceptions.end() ? tf_default : it->second;
}

Cardinal tf_invariant(const FDGroup& group, Prime p) {
  require_prime(p);
  Cardinal tf;
  for (const Summand& s : group.summands()) {
    if (s.chi.at(p).is_finite()) tf += s.multiplicity;
  }
  return tf;
}

SzmielewProfile szmielew_profile(const FDGroup& group) {
  SzmielewProfile profile;
  std::set<Prime> named;
  for (const Summand& s : group.summands()) {
    if (s.chi.default_class() == Default::kZero) profile.tf_default += s.multiplicity;
    for (const auto& [p, v] : s.chi.exceptions()) named.insert(p);
  }
  for (Prime p : named) {
    Cardinal tf = tf_invariant(group, p);
    if (tf != profile.tf_default) profile.tf_exceptions.emplace(p, tf);
  }
  return profile;
}

bool elementarily_equivalent(const FDGroup& a, const FDGroup& b) {
  return szmielew_profile(a) == szmielew_profile(b);
}

std::set<HType> realizable_htypes(const FDGroup& group) {
  std::set<HType> closure;
  for (const Summand& s : group.summands()) closure.insert(htype_of(s.chi));
  // Saturate under pairwise meets; the closure is finite.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<HType> items(closure.begin(), closure.end());
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        if (closure.insert(htype_meet(items[i], items[j])).second) grew = true;
      }
    }
  }
  return closure;
}

bool iso1_equivalent(const FDGroup& a, const FDGroup& b) {
  return elementarily_equivalent(a, b) && realizable_htypes(a) == realizable_htypes(b);
}

}  // namespace tfab
