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

#ifndef IVORDER_LATTICE_HPP_
#define IVORDER_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ivorder/catalog.hpp"
#include "ivorder/interval.hpp"
#include "ivorder/report.hpp"

namespace ivorder {

// P1 ≤_T P2 iff P1 contains every strict pair of P2. The chain is the
// bottom and the antichain the top. Throws kSizeMismatch.
bool leq_T(const IntervalOrder& a, const IntervalOrder& b);
// The same order read off pointwise up-set containment F_a(x) ⊇ F_b(x).
bool leq_by_up_sets(const IntervalOrder& a, const IntervalOrder& b);
// ... and off pointwise down-set containment I_a(x) ⊇ I_b(x).
bool leq_by_down_sets(const IntervalOrder& a, const IntervalOrder& b);

// Union of the two strict relations. Throws InvariantViolation when the
// union is not a catalog member, which happens from n = 5 on: the union is
// always a 2+2-free poset but its identity labelling need not be admissible.
// Throws kSizeMismatch.
IntervalOrder meet(const IntervalOrder& a, const IntervalOrder& b);

// Union of every catalog member whose relation lies inside a ∩ b.
// Throws kSizeMismatch when a, b and cat disagree on n.
IntervalOrder join(const IntervalOrder& a, const IntervalOrder& b,
                   const Catalog& cat);

// Hasse diagram of ≤_T over a catalog. Node i is cat[i]; a cover
// (lower, upper) means lower <_T upper with nothing strictly between.
struct LatticeDiagram {
  int n = 0;
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Dense ≤_T relation over a catalog, one bit row per member.
class OrderMatrix {
 public:
  explicit OrderMatrix(const Catalog& cat);

  std::size_t size() const { return size_; }
  bool leq(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  // Members j with i ≤_T j.
  std::vector<std::uint64_t> up_row(std::size_t i) const;
  // Members j with j ≤_T i.
  std::vector<std::uint64_t> down_row(std::size_t i) const;
  std::size_t words() const { return words_; }

 private:
  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
};

LatticeDiagram build_lattice(const Catalog& cat);

// Greatest lower bound / least upper bound of members i and j read off the
// raw order relation, restricted to the members flagged in `subset` (all
// members when empty). Returns SIZE_MAX when no unique bound exists.
std::size_t order_glb(const OrderMatrix& order, std::size_t i, std::size_t j,
                      const std::vector<bool>& subset = {});
std::size_t order_lub(const OrderMatrix& order, std::size_t i, std::size_t j,
                      const std::vector<bool>& subset = {});

struct LatticeVerifyOptions {
  // 0 checks every ordered pair and every triple. Otherwise this many
  // random pairs (and sample_triples random triples for associativity).
  std::uint64_t sample_pairs = 0;
  std::uint64_t sample_triples = 100000;
  std::uint64_t seed = 20260101;
};

// Checks that the diagram is the transitive reduction of ≤_T with the
// chain at the bottom and the antichain on top, that meet/join are the
// GLB/LUB read off the order relation, and the lattice laws (commutativity,
// idempotence, absorption, associativity).
VerificationReport verify_lattice(const LatticeDiagram& diag,
                                  const Catalog& cat,
                                  const LatticeVerifyOptions& opts = {});

}  // namespace ivorder

#endif  // IVORDER_LATTICE_HPP_
