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

#include "tfab/verify/oracles.hpp"

#include <set>

#include "tfab/error.hpp"

namespace tfab::verify {

namespace {

struct Copy {
  std::size_t summand;
  std::uint64_t copy;
};

std::vector<Copy> copies_of(const FDGroup& group) {
  std::vector<Copy> out;
  for (std::size_t s = 0; s < group.size(); ++s) {
    const Cardinal m = group.summands()[s].multiplicity;
    if (m.is_omega()) fail(ErrorCode::kPreconditionViolated, "oracle needs finite ranks");
    for (std::uint64_t c = 0; c < m.value(); ++c) out.push_back({s, c});
  }
  return out;
}

// Random integer matrix of determinant 1 built from elementary row moves.
std::vector<std::vector<Integer>> random_unimodular(std::size_t r, Rng& rng) {
  std::vector<std::vector<Integer>> u(r, std::vector<Integer>(r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  if (r < 2) return u;
  for (int step = 0; step < 6; ++step) {
    std::size_t i = uniform(rng, 0, r - 1);
    std::size_t j = uniform(rng, 0, r - 1);
    if (i == j) continue;
    long f = static_cast<long>(uniform(rng, 0, 6)) - 3;
    for (std::size_t c = 0; c < r; ++c) u[i][c] += f * u[j][c];
  }
  return u;
}

}  // namespace

std::uint64_t tf_dimension_oracle(const FDGroup& group, Prime p, std::uint64_t n, Rng& rng) {
  const std::vector<Copy> copies = copies_of(group);
  const std::size_t r = copies.size();
  if (r == 0) return 0;

  // Generators of the localization at p: p^-h e for height h, and a deep
  // p-power fraction for divisible coordinates.
  std::vector<Element> gens;
  for (const Copy& c : copies) {
    ExtHeight h = group.summands()[c.summand].chi.at(p);
    std::uint64_t depth = h.is_inf() ? n + 2 : h.value();
    Element e;
    e.set({c.summand, c.copy}, Rational(Integer(1), power(p, depth)));
    gens.push_back(e);
  }
  auto u = random_unimodular(r, rng);
  std::vector<Element> mixed(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) mixed[i] += Rational(u[i][j]) * gens[j];
  }

  // Count coefficient vectors in [0, p)^r whose combination lies in
  // p^(n+1) A; they form a subspace of F_p^r.
  const Rational lift(power(p, n));
  const Rational drop(Integer(1), power(p, n + 1));
  std::uint64_t in_kernel = 0;
  std::vector<std::uint64_t> coef(r, 0);
  for (;;) {
    Element y;
    for (std::size_t i = 0; i < r; ++i) {
      if (coef[i] != 0) y += Rational(static_cast<unsigned long>(coef[i])) * mixed[i];
    }
    y *= lift;
    y *= drop;
    if (is_member(group, y)) ++in_kernel;
    std::size_t i = 0;
    while (i < r && ++coef[i] == p) coef[i++] = 0;
    if (i == r) break;
  }
  std::uint64_t dim = 0;
  while (in_kernel > 1) {
    in_kernel /= p;
    ++dim;
  }
  return r - dim;
}

std::size_t bareiss_rank(const std::vector<Element>& elems) {
  std::set<CoordKey> keys;
  for (const Element& e : elems) {
    for (const auto& [k, v] : e.coords()) keys.insert(k);
  }
  std::vector<std::vector<Integer>> m;
  for (const Element& e : elems) {
    Integer den = 1;
    for (const auto& [k, v] : e.coords()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Integer> row;
    for (const CoordKey& k : keys) row.push_back(Rational(e.get(k) * den).get_num());
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size();
  const std::size_t cols = keys.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::uint64_t exact_type_oracle(const FDGroup& group, const HType& t, std::int64_t bound) {
  const std::vector<Copy> copies = copies_of(group);
  std::set<Prime> probe(t.flips().begin(), t.flips().end());
  for (const Summand& s : group.summands()) {
    for (const auto& [p, h] : s.chi.exceptions()) probe.insert(p);
  }
  Prime generic = 2;
  while (probe.count(generic) > 0 || !is_prime(generic)) ++generic;
  probe.insert(generic);

  std::vector<Element> found;
  const std::size_t r = copies.size();
  std::vector<std::int64_t> coef(r, -bound);
  if (r == 0) return 0;
  for (;;) {
    std::set<std::size_t> support;
    Element x;
    for (std::size_t i = 0; i < r; ++i) {
      if (coef[i] == 0) continue;
      support.insert(copies[i].summand);
      x.set({copies[i].summand, copies[i].copy}, Rational(static_cast<long>(coef[i])));
    }
    if (!support.empty()) {
      bool match = true;
      for (Prime p : probe) {
        bool inf = true;
        for (std::size_t s : support) inf = inf && group.summands()[s].chi.at(p).is_inf();
        if (inf != t.infinite_at(p)) {
          match = false;
          break;
        }
      }
      if (match) found.push_back(x);
    }
    std::size_t i = 0;
    while (i < r && ++coef[i] > bound) coef[i++] = -bound;
    if (i == r) break;
  }
  return bareiss_rank(found);
}

bool height_independent_oracle(const MixedGroup& group, const MixedElement& c,
                               const MixedElement& d, Prime p, std::int64_t bound) {
  std::vector<Height> hv(2 * bound + 1, Height::infinite());
  for (std::int64_t v = -bound; v <= bound; ++v) {
    if (v != 0) hv[v + bound] = mixed_height(group, scale(Integer(static_cast<long>(v)), d), p);
  }
  for (std::int64_t u = -bound; u <= bound; ++u) {
    if (u == 0) continue;
    const Integer iu(static_cast<long>(u));
    const Height hu = mixed_height(group, scale(iu, c), p);
    for (std::int64_t v = -bound; v <= bound; ++v) {
      if (v == 0) continue;
      const Height h = mixed_height(group, combine(iu, c, Integer(static_cast<long>(v)), d), p);
      if (h != min(hu, hv[v + bound])) return false;
    }
  }
  return true;
}

}  // namespace tfab::verify
