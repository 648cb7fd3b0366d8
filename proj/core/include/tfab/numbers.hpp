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

#ifndef TFAB_NUMBERS_HPP_
#define TFAB_NUMBERS_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tfab {

using Integer = mpz_class;
using Rational = mpq_class;
using Prime = std::uint64_t;

// Deterministic Miller-Rabin for the whole 64-bit range.
bool is_prime(std::uint64_t n);

// Throws Error(kNotAPrime) unless p is prime.
void require_prime(std::uint64_t p);

// Sorted distinct prime divisors of |n|. n must be nonzero and fit in 64 bits
// after trial division by primes below 2^20 (Pollard rho handles the rest).
std::vector<Prime> prime_divisors(const Integer& n);

// Exponent of p in the nonzero integer n.
std::uint64_t valuation(const Integer& n, Prime p);

// Exponent of p in the nonzero rational x; negative when p divides the
// denominator.
std::int64_t valuation(const Rational& x, Prime p);

Integer power(Prime p, std::uint64_t e);

Integer gcd(const Integer& a, const Integer& b);

// Solves x*a + y*b = gcd(a, b) with a, b not both zero. x is the least
// non-negative solution modulo |b / g| (x = 0 when |b / g| = 1).
struct Bezout {
  Integer x;
  Integer y;
  Integer g;
};
Bezout bezout(const Integer& a, const Integer& b);

// Cardinal in N ∪ {omega}; omega absorbs addition.
class Cardinal {
 public:
  constexpr Cardinal() = default;
  constexpr explicit Cardinal(std::uint64_t n) : value_(n) {}
  static constexpr Cardinal omega() {
    Cardinal c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return !omega_ && value_ == 0; }

  friend constexpr Cardinal operator+(Cardinal a, Cardinal b) {
    if (a.omega_ || b.omega_) return omega();
    return Cardinal(a.value_ + b.value_);
  }
  Cardinal& operator+=(Cardinal o) { return *this = *this + o; }

  friend constexpr bool operator==(Cardinal a, Cardinal b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

}  // namespace tfab

#endif  // TFAB_NUMBERS_HPP_
