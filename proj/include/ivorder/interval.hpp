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

#ifndef IVORDER_INTERVAL_HPP_
#define IVORDER_INTERVAL_HPP_

#include <compare>
#include <span>
#include <vector>

#include "ivorder/poset.hpp"

namespace ivorder {

// Interval order carried in its canonical admissible labelling: the
// identity labelling 1..n is admissible and the lt matrix equals the one
// produced by canonical_form. Two interval orders are isomorphic exactly
// when their canonical matrices are equal.
class IntervalOrder {
 public:
  // Accepts p only when it is 2+2-free and already in canonical form;
  // throws kNotAnIntervalOrder otherwise.
  static IntervalOrder from_canonical(const Poset& p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool less(int x, int y) const { return poset_.less(x, y); }

  // |I(x)| and |F(x)| for x = 1..n, indexed from 0.
  const std::vector<int>& down_sizes() const { return dsize_; }
  const std::vector<int>& up_sizes() const { return usize_; }

  auto operator<=>(const IntervalOrder& other) const {
    return poset_ <=> other.poset_;
  }
  bool operator==(const IntervalOrder& other) const {
    return poset_ == other.poset_;
  }

 private:
  explicit IntervalOrder(const Poset& p);

  Poset poset_;
  std::vector<int> dsize_;
  std::vector<int> usize_;
};

// A bijection from elements to labels: perm[x-1] is the label of x.
struct Labelling {
  std::vector<int> perm;

  int operator()(int x) const { return perm[static_cast<std::size_t>(x - 1)]; }
  bool operator==(const Labelling&) const = default;
};

struct Interval {
  int lo = 0;
  int hi = 0;
  bool operator==(const Interval&) const = default;
};

// Integer intervals indexed by element label order; x<y iff hi(x) < lo(y).
struct IntervalRepresentation {
  std::vector<Interval> intervals;
  int magnitude = 0;

  bool operator==(const IntervalRepresentation&) const = default;
};

// Principal down-sets are pairwise comparable under inclusion.
bool is_interval_order(const Poset& p);
// Same test through principal up-sets.
bool is_interval_order_by_up_sets(const Poset& p);

// Sorts elements by (|I(x)|, |F(x)|), ties by label. Throws
// kNotAnIntervalOrder.
Labelling admissible_labelling(const Poset& p);

// True iff lam is a linear extension and every label-ordered pair x, y has
// I(x) ⊂ I(y), or I(x) = I(y) and F(x) ⊂ F(y), or x ∼ y.
bool is_admissible(const Poset& p, const Labelling& lam);

// Relabels p by its admissible labelling. Throws kNotAnIntervalOrder.
IntervalOrder canonical_form(const Poset& p);

// Minimal-magnitude integer representation: lo is one plus the rank of I(x)
// among distinct down-sets, hi is the rank of F(x) counted from the top
// among distinct up-sets.
IntervalRepresentation to_representation(const IntervalOrder& p);

// Builds x<y iff hi(x) < lo(y) and canonicalizes. Throws kMalformedInterval
// when some lo > hi, kShape when the family is empty or too large.
IntervalOrder from_representation(std::span<const Interval> intervals);

}  // namespace ivorder

#endif  // IVORDER_INTERVAL_HPP_
