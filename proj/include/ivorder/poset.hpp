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

#ifndef IVORDER_POSET_HPP_
#define IVORDER_POSET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ivorder {

inline constexpr int kMaxElements = 32;

// A set of 1-based elements, bit x-1 standing for element x.
class ElementSet {
 public:
  using Bits = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Bits bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int x : elements) s.insert(x);
    return s;
  }
  // {1, ..., n}
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int x) const { return (bits_ >> (x - 1)) & 1U; }
  constexpr void insert(int x) { bits_ |= Bits{1} << (x - 1); }
  constexpr void erase(int x) { bits_ &= ~(Bits{1} << (x - 1)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  // Members in ascending order.
  std::vector<int> members() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  Bits bits_ = 0;
};

enum class PatternId { kTwoPlusTwo, kFenceN };

// Elements (a, b, c, d) of an induced occurrence. For kTwoPlusTwo the
// occurrence has exactly a<b and c<d; for kFenceN exactly a<c, b<c, b<d.
using PatternWitness = std::array<int, 4>;

// Finite poset on {1, ..., n}, holding only the strict part of the order.
// Immutable once built; every factory validates the poset axioms.
class Poset {
 public:
  // Builds from an n×n strict-relation matrix, lt[x-1][y-1] meaning x<y.
  // Throws Error (kShape, kReflexivity, kAntisymmetry, kTransitivity) with
  // the offending pair or triple as witness.
  static Poset from_matrix(const std::vector<std::vector<bool>>& lt);

  // Builds from strict pairs (x, y) meaning x<y, in any order. No closure is
  // applied: the input must already be transitive.
  static Poset from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  // Builds from rows where bit y-1 of above[x-1] means x<y. Validated.
  static Poset from_up_rows(int n, std::span<const ElementSet::Bits> above);

  static Poset antichain(int n);
  static Poset chain(int n);

  int size() const { return n_; }
  bool less(int x, int y) const { return up_[x - 1] >> (y - 1) & 1U; }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

  // Elements strictly below x. Throws kOutOfRange.
  ElementSet down_set(int x) const;
  // Elements strictly above x. Throws kOutOfRange.
  ElementSet up_set(int x) const;

  // Unchecked row access for hot loops.
  ElementSet below(int x) const { return ElementSet(down_[x - 1]); }
  ElementSet above(int x) const { return ElementSet(up_[x - 1]); }

  // Strict pairs, sorted lexicographically.
  std::vector<std::pair<int, int>> pairs() const;
  int relation_size() const;

  std::vector<std::vector<bool>> matrix() const;

  // Renames element x to perm[x-1]. perm must be a permutation of 1..n;
  // throws kShape otherwise.
  Poset relabel(std::span<const int> perm) const;

  // Strict-relation containment on the same ground set.
  bool contains_relation(const Poset& other) const;

  // Size first, then the row-major flattened lt matrix with false < true.
  std::strong_ordering operator<=>(const Poset& other) const;
  bool operator==(const Poset& other) const;

 private:
  Poset() = default;
  void fill_down_rows();

  int n_ = 0;
  std::array<ElementSet::Bits, kMaxElements> up_{};
  std::array<ElementSet::Bits, kMaxElements> down_{};
};

// Same as Poset::from_matrix.
Poset validate_poset(const std::vector<std::vector<bool>>& lt);

ElementSet down_set(const Poset& p, int x);
ElementSet up_set(const Poset& p, int x);

// First induced occurrence of the pattern in lexicographic scan order over
// 4-subsets and their orderings, or nullopt.
std::optional<PatternWitness> contains_induced(const Poset& p, PatternId pat);

bool order_equivalent(const Poset& p, int x, int y);

// Induced order on s, relabelled 1..|s| preserving label order.
// Throws kEmptySubset or kOutOfRange.
Poset restrict(const Poset& p, ElementSet s);

}  // namespace ivorder

#endif  // IVORDER_POSET_HPP_
