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

#include "tfab/characteristic.hpp"

#include <algorithm>
#include <iterator>

#include "tfab/error.hpp"

namespace tfab {

std::string ExtHeight::to_string() const {
  return inf_ ? std::string("inf") : std::to_string(value_);
}

Characteristic Characteristic::make(Default d,
                                    const std::map<Prime, ExtHeight>& exceptions) {
  Characteristic c(d);
  for (const auto& [p, v] : exceptions) {
    require_prime(p);
    if (v == c.default_value()) {
      fail(ErrorCode::kSemanticError,
           "redundant exception " + std::to_string(p) + ":" + v.to_string());
    }
  }
  c.exceptions_ = exceptions;
  return c;
}

Characteristic Characteristic::normalized(Default d,
                                          const std::map<Prime, ExtHeight>& values) {
  Characteristic c(d);
  for (const auto& [p, v] : values) {
    if (v != c.default_value()) c.exceptions_.emplace(p, v);
  }
  return c;
}

ExtHeight Characteristic::at(Prime p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_value() : it->second;
}

namespace {

template <typename Op>
Characteristic combine(const Characteristic& x, const Characteristic& y, Op op) {
  ExtHeight dv = op(x.default_value(), y.default_value());
  Default d = dv.is_inf() ? Default::kInf : Default::kZero;
  std::map<Prime, ExtHeight> values;
  for (const auto& [p, v] : x.exceptions()) values[p] = op(v, y.at(p));
  for (const auto& [p, v] : y.exceptions()) values[p] = op(x.at(p), v);
  return Characteristic::normalized(d, values);
}

std::set<Prime> set_union(const std::set<Prime>& a, const std::set<Prime>& b) {
  std::set<Prime> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<Prime> set_intersection(const std::set<Prime>& a, const std::set<Prime>& b) {
  std::set<Prime> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

std::set<Prime> set_difference(const std::set<Prime>& a, const std::set<Prime>& b) {
  std::set<Prime> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool disjoint(const std::set<Prime>& a, const std::set<Prime>& b) {
  return set_intersection(a, b).empty();
}

}  // namespace

Characteristic char_meet(const Characteristic& x, const Characteristic& y) {
  return combine(x, y, [](ExtHeight a, ExtHeight b) { return std::min(a, b); });
}

Characteristic char_join(const Characteristic& x, const Characteristic& y) {
  return combine(x, y, [](ExtHeight a, ExtHeight b) { return std::max(a, b); });
}

bool char_leq(const Characteristic& x, const Characteristic& y) {
  if (x.default_value() > y.default_value()) return false;
  for (const auto& [p, v] : x.exceptions()) {
    if (v > y.at(p)) return false;
  }
  for (const auto& [p, v] : y.exceptions()) {
    if (x.at(p) > v) return false;
  }
  return true;
}

bool char_equiv(const Characteristic& x, const Characteristic& y) {
  // Differing defaults differ at infinitely many primes.
  if (x.default_class() != y.default_class()) return false;
  auto differ_badly = [](ExtHeight a, ExtHeight b) {
    return a != b && (a.is_inf() || b.is_inf());
  };
  for (const auto& [p, v] : x.exceptions()) {
    if (differ_badly(v, y.at(p))) return false;
  }
  for (const auto& [p, v] : y.exceptions()) {
    if (differ_badly(x.at(p), v)) return false;
  }
  return true;
}

Characteristic char_shift(const Characteristic& x, Prime p, std::int64_t delta) {
  require_prime(p);
  if (delta == 0) return x;
  ExtHeight cur = x.at(p);
  if (cur.is_inf()) {
    fail(ErrorCode::kShiftAtInfinity, "height at " + std::to_string(p) + " is inf");
  }
  std::int64_t next = static_cast<std::int64_t>(cur.value()) + delta;
  if (next < 0) {
    fail(ErrorCode::kShiftBelowZero,
         "height at " + std::to_string(p) + " would become " + std::to_string(next));
  }
  std::map<Prime, ExtHeight> values = x.exceptions();
  values[p] = ExtHeight(static_cast<std::uint64_t>(next));
  return Characteristic::normalized(x.default_class(), values);
}

HType::HType(Default base, std::set<Prime> flips)
    : base_(base), flips_(std::move(flips)) {
  for (Prime p : flips_) require_prime(p);
}

bool HType::infinite_at(Prime p) const {
  bool flipped = flips_.count(p) > 0;
  return (base_ == Default::kInf) != flipped;
}

Characteristic HType::representative() const {
  std::map<Prime, ExtHeight> values;
  for (Prime p : flips_) {
    values[p] = base_ == Default::kZero ? ExtHeight::inf() : ExtHeight(0);
  }
  return Characteristic::normalized(base_, values);
}

HType htype_of(const Characteristic& x) {
  std::set<Prime> flips;
  for (const auto& [p, v] : x.exceptions()) {
    if (v.is_inf() != x.default_value().is_inf()) flips.insert(p);
  }
  return HType(x.default_class(), std::move(flips));
}

// h-types are determined by the set of primes where they are infinite; that
// set is finite (base 0) or cofinite (base inf), and meet/join are the
// intersection/union of these sets.
HType htype_meet(const HType& s, const HType& t) {
  const bool s0 = s.base() == Default::kZero;
  const bool t0 = t.base() == Default::kZero;
  if (s0 && t0) return HType(Default::kZero, set_intersection(s.flips(), t.flips()));
  if (s0) return HType(Default::kZero, set_difference(s.flips(), t.flips()));
  if (t0) return HType(Default::kZero, set_difference(t.flips(), s.flips()));
  return HType(Default::kInf, set_union(s.flips(), t.flips()));
}

HType htype_join(const HType& s, const HType& t) {
  const bool s0 = s.base() == Default::kZero;
  const bool t0 = t.base() == Default::kZero;
  if (s0 && t0) return HType(Default::kZero, set_union(s.flips(), t.flips()));
  if (s0) return HType(Default::kInf, set_difference(t.flips(), s.flips()));
  if (t0) return HType(Default::kInf, set_difference(s.flips(), t.flips()));
  return HType(Default::kInf, set_intersection(s.flips(), t.flips()));
}

bool htype_leq(const HType& s, const HType& t) {
  const bool s0 = s.base() == Default::kZero;
  const bool t0 = t.base() == Default::kZero;
  if (s0 && t0) return set_difference(s.flips(), t.flips()).empty();
  if (s0) return disjoint(s.flips(), t.flips());
  if (t0) return false;
  return set_difference(t.flips(), s.flips()).empty();
}

}  // namespace tfab
