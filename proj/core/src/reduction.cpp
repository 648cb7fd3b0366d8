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

#include "tfab/reduction.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tfab/error.hpp"

namespace tfab {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rows are coordinates, columns are elements.
RationalMatrix coordinate_matrix(const std::vector<Element>& elems) {
  std::set<CoordKey> keys;
  for (const Element& e : elems) {
    for (const auto& [k, v] : e.coords()) keys.insert(k);
  }
  RationalMatrix m;
  for (const CoordKey& k : keys) {
    std::vector<Rational> row;
    row.reserve(elems.size());
    for (const Element& e : elems) row.push_back(e.get(k));
    m.push_back(std::move(row));
  }
  return m;
}

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (Rational& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void require_nonzero(const std::vector<Element>& elems) {
  for (const Element& e : elems) {
    if (e.is_zero()) fail(ErrorCode::kZeroElement, "tuple contains the zero element");
  }
}

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<Integer> row_times(const std::vector<Integer>& row, const IntegerMatrix& m,
                               std::size_t width) {
  std::vector<Integer> out(width, Integer(0));
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    for (std::size_t c = 0; c < width; ++c) out[c] += row[j] * m[j][c];
  }
  return out;
}

std::vector<Integer> linear(const Integer& x, const std::vector<Integer>& u, const Integer& y,
                            const std::vector<Integer>& v) {
  std::vector<Integer> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = x * u[i] + y * v[i];
  return out;
}

ReductionResult reduce_rec(const FDGroup& group, const std::vector<Element>& t) {
  auto rel = find_dependency(group, t);
  if (!rel) return {t, identity(t.size())};
  const std::vector<Integer>& c = rel->coefficients;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) nz.push_back(i);
  }
  const std::size_t i = nz[nz.size() - 2];
  const std::size_t j = nz.back();

  std::vector<Element> rest;
  std::vector<std::size_t> rest_index;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k == i || k == j) continue;
    rest.push_back(t[k]);
    rest_index.push_back(k);
  }

  if (nz.size() == 2) {
    // Base case: a_i = beta c, a_j = alpha c.
    Element cc = reduce_pair(group, t[i], t[j], DependencyRelation{{c[i], c[j]}});
    Integer alpha = c[i];
    Integer beta = -c[j];
    if (alpha < 0) {
      alpha = -alpha;
      beta = -beta;
    }
    rest.push_back(cc);
    ReductionResult sub = reduce_rec(group, rest);
    IntegerMatrix expr(t.size());
    for (std::size_t k = 0; k < rest_index.size(); ++k) expr[rest_index[k]] = sub.expression[k];
    const std::vector<Integer>& crow = sub.expression.back();
    expr[i] = linear(beta, crow, Integer(0), crow);
    expr[j] = linear(alpha, crow, Integer(0), crow);
    return {sub.basis, expr};
  }

  // Fold the last two terms: b = a'_i a_i + a'_j a_j, b' = gamma a_i + beta a_j
  // with beta a'_i - gamma a'_j = 1, so a_i = beta b - a'_j b' and
  // a_j = a'_i b' - gamma b.
  const Integer g = gcd(c[i], c[j]);
  const Integer ai = c[i] / g;
  const Integer aj = c[j] / g;
  Bezout bz = bezout(ai, aj);
  const Integer beta = bz.x;
  const Integer gamma = -bz.y;
  Element b = Rational(ai) * t[i] + Rational(aj) * t[j];
  Element bp = Rational(gamma) * t[i] + Rational(beta) * t[j];

  std::vector<Element> first = rest;
  if (!b.is_zero()) first.push_back(b);
  ReductionResult r1 = reduce_rec(group, first);
  std::vector<Element> second = r1.basis;
  if (!bp.is_zero()) second.push_back(bp);
  ReductionResult r2 = reduce_rec(group, second);
  const std::size_t width = r2.basis.size();
  const std::size_t m1 = r1.basis.size();

  IntegerMatrix in_b1(r2.expression.begin(), r2.expression.begin() + m1);
  std::vector<Integer> zero(width, Integer(0));
  std::vector<Integer> b_row = b.is_zero() ? zero : row_times(r1.expression.back(), in_b1, width);
  std::vector<Integer> bp_row = bp.is_zero() ? zero : r2.expression.back();

  IntegerMatrix expr(t.size());
  for (std::size_t k = 0; k < rest_index.size(); ++k) {
    expr[rest_index[k]] = row_times(r1.expression[k], in_b1, width);
  }
  expr[i] = linear(beta, b_row, -aj, bp_row);
  expr[j] = linear(ai, bp_row, -gamma, b_row);
  return {r2.basis, expr};
}

}  // namespace

std::size_t rational_rank(const std::vector<Element>& elems) {
  RationalMatrix m = coordinate_matrix(elems);
  return rref(m, elems.size()).size();
}

std::optional<DependencyRelation> find_dependency(const FDGroup& group,
                                                  const std::vector<Element>& elems) {
  require_nonzero(elems);
  for (const Element& e : elems) validate_element(group, e);
  const std::size_t n = elems.size();
  RationalMatrix m = coordinate_matrix(elems);
  std::vector<std::size_t> pivots = rref(m, n);
  if (pivots.size() == n) return std::nullopt;

  std::size_t free = 0;
  while (free < pivots.size() && pivots[free] == free) ++free;
  std::vector<Rational> x(n, Rational(0));
  x[free] = 1;
  for (std::size_t r = 0; r < pivots.size() && pivots[r] < free; ++r) x[pivots[r]] = -m[r][free];

  Integer den = 1;
  for (const Rational& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  DependencyRelation rel;
  Integer g = 0;
  for (const Rational& q : x) {
    Rational s = q * den;
    rel.coefficients.push_back(s.get_num());
    g = gcd(g, s.get_num());
  }
  bool negate = false;
  for (const Integer& v : rel.coefficients) {
    if (v != 0) {
      negate = v < 0;
      break;
    }
  }
  for (Integer& v : rel.coefficients) {
    v /= g;
    if (negate) v = -v;
  }
  return rel;
}

Element reduce_pair(const FDGroup& group, const Element& a1, const Element& a2,
                    const DependencyRelation& rel) {
  if (rel.coefficients.size() != 2) {
    fail(ErrorCode::kNotAPairRelation, "relation must have two coefficients");
  }
  Integer alpha = rel.coefficients[0];
  Integer beta = -rel.coefficients[1];
  if (alpha == 0 || beta == 0 || gcd(alpha, beta) != 1) {
    fail(ErrorCode::kNotAPairRelation, "coefficients must be nonzero and coprime");
  }
  if (alpha < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  if (Rational(alpha) * a1 != Rational(beta) * a2) {
    fail(ErrorCode::kNotAPairRelation, "relation does not hold");
  }
  validate_element(group, a2);
  // p^e | alpha forces h_p(a2) >= e: divide a2 prime by prime.
  Element c = a2;
  for (Prime p : prime_divisors(alpha)) {
    Rational inv(Integer(1), power(p, valuation(alpha, p)));
    c = inv * c;
    if (!is_member(group, c)) {
      fail(ErrorCode::kMembershipViolation,
           "division by " + std::to_string(p) + " leaves the group");
    }
  }
  return c;
}

ReductionResult reduce_tuple(const FDGroup& group, const std::vector<Element>& elems) {
  require_nonzero(elems);
  for (const Element& e : elems) validate_element(group, e);
  return reduce_rec(group, elems);
}

Element apply_row(const std::vector<Integer>& row, const std::vector<Element>& basis) {
  Element out;
  for (std::size_t j = 0; j < row.size() && j < basis.size(); ++j) {
    if (row[j] != 0) out += Rational(row[j]) * basis[j];
  }
  return out;
}

std::pair<Integer, Integer> split_coefficients(const Integer& alpha, const Integer& beta,
                                               Prime p, std::uint64_t shift) {
  const Integer unit = alpha * power(p, shift);
  const Integer mod = abs(beta);
  Integer gamma = 1;
  if (mod != 1) {
    Integer r = unit % mod;
    if (mpz_invert(gamma.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t()) == 0) {
      fail(ErrorCode::kPreconditionViolated, "alpha p^shift and beta are not coprime");
    }
    if (gamma <= 0) gamma += mod;
  }
  return {gamma, (gamma * unit - 1) / beta};
}

InfiniteSplit split_infinite_dependency(const MixedGroup& group, const MixedElement& a,
                                        const MixedElement& b, const Integer& alpha,
                                        const Integer& beta, Prime p) {
  require_prime(p);
  validate_element(group, a);
  validate_element(group, b);
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::kPreconditionViolated, "zero element");
  Height ha = mixed_height(group, a, p);
  Height hb = mixed_height(group, b, p);
  if (!ha.is_exact() || !hb.is_exact() || ha.value() > hb.value()) {
    fail(ErrorCode::kPreconditionViolated, "need finite heights k <= l");
  }
  if (gcd(alpha, beta) != 1) fail(ErrorCode::kPreconditionViolated, "alpha, beta not coprime");
  Integer ab = alpha * beta;
  if (ab == 0 || mpz_divisible_ui_p(ab.get_mpz_t(), p)) {
    fail(ErrorCode::kPreconditionViolated, "p divides alpha beta");
  }
  const std::uint64_t shift = hb.value() - ha.value();
  const Integer lift = power(p, shift);
  MixedElement sum = combine(alpha * lift, a, beta, b);
  if (sum.is_zero() || !mixed_height(group, sum, p).is_infinite()) {
    fail(ErrorCode::kPreconditionViolated, "the combination does not have infinite height");
  }
  InfiniteSplit out;
  out.c = divide_by_prime_power(group, sum, p, shift);

  std::tie(out.gamma, out.delta) = split_coefficients(alpha, beta, p, shift);
  out.d = combine(out.delta, a, out.gamma, b);
  return out;
}

}  // namespace tfab
