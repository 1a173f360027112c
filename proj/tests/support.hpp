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


// Shared helpers for the unit tests.

#ifndef IVORDER_TESTS_SUPPORT_HPP_
#define IVORDER_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "ivorder/error.hpp"
#include "ivorder/poset.hpp"
#include "oracle.hpp"

namespace ivorder::testing {

inline Poset make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  const std::vector<std::pair<int, int>> v(pairs);
  return Poset::from_pairs(n, v);
}

inline oracle::Matrix to_matrix(const Poset& p) {
  oracle::Matrix lt(static_cast<std::size_t>(p.size()),
                    std::vector<bool>(static_cast<std::size_t>(p.size())));
  for (const auto& [x, y] : p.pairs()) lt[x - 1][y - 1] = true;
  return lt;
}

inline Poset from_matrix(const oracle::Matrix& lt) { return Poset::from_matrix(lt); }

// The fence a<c, b<c, b<d presented as a=1, b=2, c=3, d=4.
inline Poset fence() { return make(4, {{1, 3}, {2, 3}, {2, 4}}); }

inline Poset two_plus_two() { return make(4, {{1, 2}, {3, 4}}); }

// Kind of the Error thrown by f, or nullopt if f does not throw one.
template <typename F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace ivorder::testing

#endif  // IVORDER_TESTS_SUPPORT_HPP_
