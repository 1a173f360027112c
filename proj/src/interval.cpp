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

#include "ivorder/interval.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "ivorder/error.hpp"

namespace ivorder {

namespace {

std::pair<int, int> sort_key(const Poset& p, int x) {
  return {p.below(x).size(), p.above(x).size()};
}

[[noreturn]] void throw_not_interval() {
  throw Error(ErrorKind::kNotAnIntervalOrder,
              "poset contains an induced 2+2 and is not an interval order");
}

}  // namespace

IntervalOrder::IntervalOrder(const Poset& p) : poset_(p) {
  const int n = p.size();
  dsize_.reserve(static_cast<std::size_t>(n));
  usize_.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    dsize_.push_back(p.below(x).size());
    usize_.push_back(p.above(x).size());
  }
}

IntervalOrder IntervalOrder::from_canonical(const Poset& p) {
  if (!is_interval_order(p)) throw_not_interval();
  for (int x = 1; x < p.size(); ++x) {
    if (sort_key(p, x + 1) < sort_key(p, x)) {
      throw Error(ErrorKind::kNotAnIntervalOrder,
                  "interval order is not in canonical labelling at element " +
                      std::to_string(x),
                  {x, x + 1});
    }
  }
  return IntervalOrder(p);
}

bool is_interval_order(const Poset& p) {
  const int n = p.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const ElementSet a = p.below(x);
      const ElementSet b = p.below(y);
      if (!a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
  }
  return true;
}

bool is_interval_order_by_up_sets(const Poset& p) {
  const int n = p.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const ElementSet a = p.above(x);
      const ElementSet b = p.above(y);
      if (!a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
  }
  return true;
}

Labelling admissible_labelling(const Poset& p) {
  if (!is_interval_order(p)) throw_not_interval();
  const int n = p.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  // Down-sets form a chain, so equal |I| means equal I; likewise for F.
  std::stable_sort(order.begin(), order.end(), [&p](int x, int y) {
    return sort_key(p, x) < sort_key(p, y);
  });
  Labelling lam{std::vector<int>(static_cast<std::size_t>(n))};
  for (int k = 0; k < n; ++k) {
    lam.perm[static_cast<std::size_t>(order[static_cast<std::size_t>(k)] - 1)] = k + 1;
  }
  return lam;
}

bool is_admissible(const Poset& p, const Labelling& lam) {
  const int n = p.size();
  if (static_cast<int>(lam.perm.size()) != n) return false;
  std::vector<int> element_at(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x) {
    const int label = lam(x);
    if (label < 1 || label > n || element_at[static_cast<std::size_t>(label)] != 0) {
      return false;
    }
    element_at[static_cast<std::size_t>(label)] = x;
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (p.less(x, y) && lam(x) > lam(y)) return false;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int x = element_at[static_cast<std::size_t>(i)];
      const int y = element_at[static_cast<std::size_t>(j)];
      const ElementSet ix = p.below(x), iy = p.below(y);
      const ElementSet fx = p.above(x), fy = p.above(y);
      const bool ok = ix.is_proper_subset_of(iy) ||
                      (ix == iy && fx.is_proper_subset_of(fy)) ||
                      (ix == iy && fx == fy);
      if (!ok) return false;
    }
  }
  return true;
}

IntervalOrder canonical_form(const Poset& p) {
  return IntervalOrder::from_canonical(p.relabel(admissible_labelling(p).perm));
}

IntervalRepresentation to_representation(const IntervalOrder& order) {
  const Poset& p = order.poset();
  const int n = p.size();
  // Both families are chains, so a set is determined by its cardinality.
  std::set<int> down_sizes(order.down_sizes().begin(), order.down_sizes().end());
  std::set<int> up_sizes(order.up_sizes().begin(), order.up_sizes().end());
  const int distinct_up = static_cast<int>(up_sizes.size());

  IntervalRepresentation rep;
  rep.intervals.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    const int d = order.down_sizes()[static_cast<std::size_t>(x - 1)];
    const int u = order.up_sizes()[static_cast<std::size_t>(x - 1)];
    const int lo = 1 + static_cast<int>(std::distance(down_sizes.begin(),
                                                      down_sizes.find(d)));
    const int hi = distinct_up - static_cast<int>(std::distance(
                                     up_sizes.begin(), up_sizes.find(u)));
    rep.intervals.push_back({lo, hi});
    rep.magnitude = std::max(rep.magnitude, hi);
  }
  return rep;
}

IntervalOrder from_representation(std::span<const Interval> intervals) {
  const int n = static_cast<int>(intervals.size());
  if (n < 1 || n > kMaxElements) {
    throw Error(ErrorKind::kShape, "interval family must have 1.." +
                                       std::to_string(kMaxElements) + " members");
  }
  std::vector<ElementSet::Bits> rows(intervals.size(), 0);
  for (int x = 1; x <= n; ++x) {
    const Interval& ix = intervals[static_cast<std::size_t>(x - 1)];
    if (ix.lo > ix.hi) {
      throw Error(ErrorKind::kMalformedInterval,
                  "interval of element " + std::to_string(x) + " has lo > hi",
                  {x});
    }
    for (int y = 1; y <= n; ++y) {
      if (ix.hi < intervals[static_cast<std::size_t>(y - 1)].lo) {
        rows[static_cast<std::size_t>(x - 1)] |= ElementSet::Bits{1} << (y - 1);
      }
    }
  }
  return canonical_form(Poset::from_up_rows(n, rows));
}

}  // namespace ivorder
