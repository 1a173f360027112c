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


#include <doctest.h>

#include <random>

#include "ivorder/poset.hpp"
#include "support.hpp"

namespace ivorder {
namespace {

using testing::error_kind;
using testing::fence;
using testing::make;
using testing::two_plus_two;

TEST_SUITE("poset") {

TEST_CASE("validation accepts posets and names the first violation") {
  CHECK(Poset::antichain(1).relation_size() == 0);
  CHECK(two_plus_two().pairs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  try {
    make(3, {{1, 2}, {2, 3}});
    FAIL("missing transitive pair accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kTransitivity);
    CHECK(e.witness() == std::vector<int>{1, 2, 3});
  }
  CHECK(error_kind([] { make(2, {{1, 1}}); }) == ErrorKind::kReflexivity);
  CHECK(error_kind([] { make(2, {{1, 2}, {2, 1}}); }) == ErrorKind::kAntisymmetry);
  CHECK(error_kind([] { make(2, {{1, 3}}); }) == ErrorKind::kOutOfRange);
  CHECK(error_kind([] { Poset::from_matrix({{false, true}}); }) == ErrorKind::kShape);
  CHECK(error_kind([] { Poset::antichain(0); }) == ErrorKind::kShape);
  CHECK(error_kind([] { Poset::antichain(kMaxElements + 1); }) == ErrorKind::kShape);
}

TEST_CASE("down and up sets use the exclusive convention") {
  const Poset anti = Poset::antichain(3);
  const Poset chain = Poset::chain(3);
  for (int x = 1; x <= 3; ++x) {
    CHECK(down_set(anti, x).empty());
    CHECK(up_set(anti, x).empty());
  }
  CHECK(down_set(chain, 3) == ElementSet::of({1, 2}));
  CHECK(up_set(chain, 1) == ElementSet::of({2, 3}));
  CHECK(down_set(fence(), 4) == ElementSet::of({2}));
  CHECK(up_set(fence(), 2) == ElementSet::of({3, 4}));
  CHECK(error_kind([&] { down_set(chain, 0); }) == ErrorKind::kOutOfRange);
  CHECK(error_kind([&] { up_set(chain, 4); }) == ErrorKind::kOutOfRange);
}

TEST_CASE("induced pattern search") {
  const auto w = contains_induced(two_plus_two(), PatternId::kTwoPlusTwo);
  REQUIRE(w);
  CHECK(*w == PatternWitness{1, 2, 3, 4});
  CHECK_FALSE(contains_induced(Poset::chain(4), PatternId::kTwoPlusTwo));
  CHECK_FALSE(contains_induced(Poset::chain(4), PatternId::kFenceN));
  CHECK(contains_induced(fence(), PatternId::kFenceN));
  CHECK_FALSE(contains_induced(fence(), PatternId::kTwoPlusTwo));
  // Adding 1<4 turns the fence into a non-induced occurrence only.
  CHECK_FALSE(contains_induced(make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}), PatternId::kFenceN));
}

TEST_CASE("order equivalence") {
  CHECK(order_equivalent(Poset::antichain(3), 1, 3));
  CHECK_FALSE(order_equivalent(Poset::chain(2), 1, 2));
  CHECK(order_equivalent(make(3, {{1, 3}, {2, 3}}), 1, 2));
}

TEST_CASE("restriction") {
  CHECK(restrict(Poset::chain(3), ElementSet::of({1, 3})) == Poset::chain(2));
  CHECK(restrict(two_plus_two(), ElementSet::of({1, 2, 3})) == make(3, {{1, 2}}));
  CHECK(restrict(fence(), ElementSet::of({1, 2, 3})) == make(3, {{1, 3}, {2, 3}}));
  CHECK(error_kind([] { restrict(Poset::chain(3), ElementSet{}); }) == ErrorKind::kEmptySubset);
  CHECK(error_kind([] { restrict(Poset::chain(3), ElementSet::of({4})); }) ==
        ErrorKind::kOutOfRange);
}

TEST_CASE("relabel renames and rejects non-permutations") {
  const std::vector<int> swap{2, 1, 3};
  CHECK(make(3, {{1, 3}}).relabel(swap) == make(3, {{2, 3}}));
  const std::vector<int> bad{1, 1, 3};
  CHECK(error_kind([&] { Poset::chain(3).relabel(bad); }) == ErrorKind::kShape);
}

TEST_CASE("properties over every poset on at most 4 points") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lt : oracle::all_labelled_posets(n)) {
      const Poset p = Poset::from_matrix(lt);
      CHECK(p.matrix() == lt);
      for (int x = 1; x <= n; ++x) {
        for (int z = 1; z <= n; ++z) {
          CHECK(p.down_set(x).contains(z) == p.less(z, x));
          CHECK(p.up_set(x).contains(z) == p.less(x, z));
        }
      }
      for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
          if (!order_equivalent(p, x, y)) continue;
          CHECK_FALSE(p.comparable(x, y));
          std::vector<int> perm(static_cast<std::size_t>(n));
          for (int k = 1; k <= n; ++k) perm[static_cast<std::size_t>(k - 1)] = k;
          std::swap(perm[static_cast<std::size_t>(x - 1)], perm[static_cast<std::size_t>(y - 1)]);
          CHECK(p.relabel(perm) == p);
        }
      }
      CHECK(contains_induced(p, PatternId::kTwoPlusTwo).has_value() ==
            oracle::has_two_plus_two(lt));
      CHECK(contains_induced(p, PatternId::kFenceN).has_value() == oracle::has_fence(lt));
    }
  }
}

TEST_CASE("restriction of random subsets keeps the induced order") {
  std::mt19937 rng(7);
  const auto posets = oracle::all_labelled_posets(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& lt = posets[rng() % posets.size()];
    const Poset p = Poset::from_matrix(lt);
    const auto mask = static_cast<ElementSet::Bits>(1 + rng() % 31);
    const auto kept = ElementSet(mask).members();
    const Poset r = restrict(p, ElementSet(mask));
    REQUIRE(r.size() == static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < kept.size(); ++j)
        CHECK(r.less(static_cast<int>(i + 1), static_cast<int>(j + 1)) ==
              p.less(kept[i], kept[j]));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace ivorder
