// Copyright 2026 The ivorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations for tests. Nothing here calls the
// library: posets are plain boolean matrices, isomorphism classes come from
// trying every permutation, and sequences are computed from their own
// recurrences.

#ifndef IVORDER_TESTS_ORACLE_HPP_
#define IVORDER_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// lt[i][j] means i<j, 0-based.
using Matrix = std::vector<std::vector<bool>>;

inline bool is_transitive(const Matrix& lt) {
  const std::size_t n = lt.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lt[a][b])
        for (std::size_t c = 0; c < n; ++c)
          if (lt[b][c] && !lt[a][c]) return false;
  return true;
}

// Every labelled poset on n points: each unordered pair is unrelated,
// i<j or j<i (3^(n(n-1)/2) assignments), kept when transitive.
inline std::vector<Matrix> all_labelled_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) total *= 3;
  std::vector<Matrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix lt(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    std::uint64_t c = code;
    for (const auto& [i, j] : slots) {
      const auto digit = c % 3;
      c /= 3;
      if (digit == 1) lt[i][j] = true;
      if (digit == 2) lt[j][i] = true;
    }
    if (is_transitive(lt)) out.push_back(std::move(lt));
  }
  return out;
}

inline Matrix permuted(const Matrix& lt, const std::vector<int>& perm) {
  const std::size_t n = lt.size();
  Matrix out(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lt[a][b]) out[perm[a]][perm[b]] = true;
  return out;
}

// Lexicographically smallest matrix over all n! relabellings.
inline Matrix iso_key(const Matrix& lt) {
  std::vector<int> perm(lt.size());
  std::iota(perm.begin(), perm.end(), 0);
  Matrix best = lt;
  do {
    Matrix cand = permuted(lt, perm);
    if (cand < best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<Matrix> unlabelled_posets(int n) {
  std::set<Matrix> keys;
  for (const auto& lt : all_labelled_posets(n)) keys.insert(iso_key(lt));
  return {keys.begin(), keys.end()};
}

inline bool incomparable(const Matrix& lt, std::size_t a, std::size_t b) {
  return a != b && !lt[a][b] && !lt[b][a];
}

// a<b and c<d with no other relation among the four.
inline bool has_two_plus_two(const Matrix& lt) {
  const std::size_t n = lt.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (lt[a][b] && lt[c][d] && incomparable(lt, a, c) &&
              incomparable(lt, a, d) && incomparable(lt, b, c) &&
              incomparable(lt, b, d))
            return true;
  return false;
}

// a<c, b<c, b<d, with a, d incomparable and a, b and c, d incomparable.
inline bool has_fence(const Matrix& lt) {
  const std::size_t n = lt.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (lt[a][c] && lt[b][c] && lt[b][d] && incomparable(lt, a, d) &&
              incomparable(lt, a, b) && incomparable(lt, c, d))
            return true;
  return false;
}

// Interval orders straight from the definition: search integer intervals
// with endpoints in 1..n so that i<j iff hi(i) < lo(j).
inline bool has_interval_model(const Matrix& lt) {
  const int n = static_cast<int>(lt.size());
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  auto fits = [&](int upto) {
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j) {
        const bool model = hi[i] < lo[j];
        if (model != lt[i][j]) return false;
      }
    return true;
  };
  auto place = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        lo[k] = a;
        hi[k] = b;
        if (fits(k) && self(self, k + 1)) return true;
      }
    return false;
  };
  return place(place, 0);
}

// Ascent sequences of length n: x1 = 0, x_{k+1} <= asc(x1..xk) + 1. They
// are equinumerous with unlabelled interval orders.
inline std::uint64_t ascent_sequences(int n) {
  auto walk = [n](auto&& self, int len, int last, int asc) -> std::uint64_t {
    if (len == n) return 1;
    std::uint64_t total = 0;
    for (int x = 0; x <= asc + 1; ++x) total += self(self, len + 1, x, asc + (x > last ? 1 : 0));
    return total;
  };
  return walk(walk, 1, 0, 0);
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[static_cast<std::size_t>(n)];
}

}  // namespace oracle

#endif  // IVORDER_TESTS_ORACLE_HPP_
