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

#include "tfab/numbers.hpp"

#include <algorithm>
#include <numeric>

#include "tfab/error.hpp"

namespace tfab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShiftBelowZero: return "ShiftBelowZero";
    case ErrorCode::kShiftAtInfinity: return "ShiftAtInfinity";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kNotAPrime: return "NotAPrime";
    case ErrorCode::kNotAPairRelation: return "NotAPairRelation";
    case ErrorCode::kMembershipViolation: return "MembershipViolation";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kMixedPrecision: return "MixedPrecision";
    case ErrorCode::kMixedPrime: return "MixedPrime";
    case ErrorCode::kInvalidLadder: return "InvalidLadder";
    case ErrorCode::kInsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::kIndeterminateAtPrecision: return "IndeterminateAtPrecision";
    case ErrorCode::kInvalidTwoType: return "InvalidTwoType";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSemanticError: return "SemanticError";
    case ErrorCode::kUsageError: return "UsageError";
    case ErrorCode::kOutOfRange: return "OutOfRange";
  }
  return "Error";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(u64 n, std::vector<Prime>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::kNotAPrime, std::to_string(p) + " is not prime");
}

std::vector<Prime> prime_divisors(const Integer& n) {
  if (n == 0) fail(ErrorCode::kOutOfRange, "prime_divisors of zero");
  Integer m = abs(n);
  std::vector<Prime> out;
  for (u64 p = 2; p < (1u << 20) && m > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= static_cast<unsigned long>(p);
    }
  }
  if (m > 1) {
    if (!m.fits_ulong_p()) {
      fail(ErrorCode::kOutOfRange, "cofactor " + m.get_str() + " too large to factor");
    }
    factor_u64(m.get_ui(), out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t valuation(const Integer& n, Prime p) {
  if (n == 0) fail(ErrorCode::kZeroElement, "valuation of zero");
  Integer m = n;
  std::uint64_t v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::int64_t valuation(const Rational& x, Prime p) {
  if (x == 0) fail(ErrorCode::kZeroElement, "valuation of zero");
  return static_cast<std::int64_t>(valuation(x.get_num(), p)) -
         static_cast<std::int64_t>(valuation(x.get_den(), p));
}

Integer power(Prime p, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  if (r.g == 0) fail(ErrorCode::kOutOfRange, "bezout of (0, 0)");
  Integer step = abs(Integer(b / r.g));
  if (step != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.x.get_mpz_t(), step.get_mpz_t());
    r.x -= q * step;
    // y moves by q * a/g * sign(b) so that x*a + y*b stays fixed.
    Integer ag = a / r.g;
    if (b > 0) {
      r.y += q * ag;
    } else {
      r.y -= q * ag;
    }
  }
  return r;
}

std::string Cardinal::to_string() const {
  return omega_ ? std::string("omega") : std::to_string(value_);
}

}  // namespace tfab
