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

#ifndef IVORDER_ENUMERATION_HPP_
#define IVORDER_ENUMERATION_HPP_

#include <cstdint>
#include <vector>

#include "ivorder/catalog.hpp"
#include "ivorder/interval.hpp"
#include "ivorder/report.hpp"

namespace ivorder {

inline constexpr int kDefaultMaxEnumerationSize = 9;

struct EnumerateOptions {
  int max_n = kDefaultMaxEnumerationSize;
  // Visit parents from last to first. Output is identical either way; the
  // switch exists so the dedup can be cross-checked against visit order.
  bool reverse_parents = false;
};

// Every way of adjoining one new element z with a down-closed I(z) and an
// up-closed F(z), all of I(z) below all of F(z), such that the result stays
// 2+2-free. Returned canonical, sorted and deduplicated.
std::vector<IntervalOrder> one_point_extensions(const IntervalOrder& p);

// All canonical interval orders of size n. Throws kResourceLimit when
// n > opts.max_n and kShape when n < 1.
Catalog enumerate(int n, const EnumerateOptions& opts = {});

// Members with no induced fence N (series-parallel interval orders).
Catalog sp_filter(const Catalog& cat);

// Every member is an interval order with admissible identity labelling and
// keeps its canonical matrix under `relabellings` random permutations.
// When `smaller` (the catalog of size n-1) is given, also checks that
// deleting element n lands in it.
VerificationReport verify_labelling(const Catalog& cat, int relabellings,
                                    std::uint64_t seed,
                                    const Catalog* smaller = nullptr);

}  // namespace ivorder

#endif  // IVORDER_ENUMERATION_HPP_
