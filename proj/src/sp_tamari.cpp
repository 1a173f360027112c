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

#include "ivorder/sp_tamari.hpp"

#include <limits>
#include <set>
#include <string>

#include "ivorder/error.hpp"
#include "ivorder/io.hpp"
#include "ivorder/lattice.hpp"

namespace ivorder {

namespace {

constexpr int kMaxTreeEnumeration = 16;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorKind::kMalformedTree, why);
}

}  // namespace

PlanarTree PlanarTree::from_parents(std::vector<int> parent) {
  const int n = static_cast<int>(parent.size());
  if (n < 1 || n > kMaxElements) {
    malformed("tree must have 1.." + std::to_string(kMaxElements) +
              " non-root nodes");
  }
  // Rightmost root path of the nodes seen so far.
  std::vector<int> path{0};
  for (int k = 1; k <= n; ++k) {
    const int p = parent[static_cast<std::size_t>(k - 1)];
    while (!path.empty() && path.back() != p) path.pop_back();
    if (path.empty()) {
      malformed("node " + std::to_string(k) + " has parent " +
                std::to_string(p) + ", which breaks preorder numbering");
    }
    path.push_back(k);
  }
  PlanarTree t;
  t.parent_ = std::move(parent);
  t.children_.assign(static_cast<std::size_t>(n) + 1, {});
  t.subtree_.assign(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k <= n; ++k) {
    t.children_[static_cast<std::size_t>(t.parent(k))].push_back(k);
  }
  for (int k = n; k >= 1; --k) {
    t.subtree_[static_cast<std::size_t>(t.parent(k))] += t.subtree_[static_cast<std::size_t>(k)];
  }
  return t;
}

PlanarTree PlanarTree::from_depths(const std::vector<int>& depth) {
  std::vector<int> parent;
  parent.reserve(depth.size());
  std::vector<int> last_at_depth{0};
  for (std::size_t i = 0; i < depth.size(); ++i) {
    const int d = depth[i];
    if (d < 1 || d > static_cast<int>(last_at_depth.size())) {
      malformed("invalid depth sequence at node " + std::to_string(i + 1));
    }
    parent.push_back(last_at_depth[static_cast<std::size_t>(d - 1)]);
    last_at_depth.resize(static_cast<std::size_t>(d));
    last_at_depth.push_back(static_cast<int>(i) + 1);
  }
  return from_parents(std::move(parent));
}

ElementSet PlanarTree::descendants(int k) const {
  const int first = k + 1;
  const int last = k + subtree_size(k) - 1;
  if (last < first) return {};
  return ElementSet(ElementSet::full(last).bits() & ~ElementSet::full(first - 1).bits());
}

IntervalOrder tree_to_poset(const PlanarTree& tree) {
  const int n = tree.size();
  std::vector<ElementSet::Bits> rows(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    // Later nodes outside u(x) are exactly those past x's subtree.
    const int first_outside = x + tree.subtree_size(x);
    rows[static_cast<std::size_t>(x - 1)] =
        ElementSet::full(n).bits() & ~ElementSet::full(first_outside - 1).bits();
  }
  try {
    const Poset p = Poset::from_up_rows(n, rows);
    if (auto w = contains_induced(p, PatternId::kFenceN)) {
      throw InvariantViolation("tree image contains an induced fence: " +
                               to_json(p).dump());
    }
    return IntervalOrder::from_canonical(p);
  } catch (const Error& e) {
    throw InvariantViolation(
        std::string("tree image is not a canonical interval order: ") + e.what());
  }
}

std::vector<PlanarTree> enumerate_trees(int n) {
  if (n < 1) throw Error(ErrorKind::kShape, "tree size must be at least 1");
  if (n > kMaxTreeEnumeration) {
    throw Error(ErrorKind::kResourceLimit,
                "tree enumeration limited to " + std::to_string(kMaxTreeEnumeration) +
                    " nodes");
  }
  std::vector<PlanarTree> out;
  std::vector<int> depth(static_cast<std::size_t>(n));
  depth[0] = 1;
  auto extend = [&](auto& self, int k) -> void {
    if (k == n) {
      out.push_back(PlanarTree::from_depths(depth));
      return;
    }
    for (int d = 1; d <= depth[static_cast<std::size_t>(k - 1)] + 1; ++d) {
      depth[static_cast<std::size_t>(k)] = d;
      self(self, k + 1);
    }
  };
  extend(extend, 1);
  return out;
}

namespace {

void require_catalog(int n, const Catalog& cat) {
  if (cat.n() != n) {
    throw Error(ErrorKind::kSizeMismatch,
                "catalog has size " + std::to_string(cat.n()) +
                    ", expected " + std::to_string(n));
  }
}

std::vector<std::size_t> sp_indices(const Catalog& cat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (!contains_induced(cat[i].poset(), PatternId::kFenceN)) out.push_back(i);
  }
  return out;
}

nlohmann::ordered_json witness_json(const PatternWitness& w) {
  return nlohmann::ordered_json::array({w[0], w[1], w[2], w[3]});
}

}  // namespace

VerificationReport verify_sp_correspondence(int n, const Catalog& cat) {
  require_catalog(n, cat);
  VerificationReport report{"sp_correspondence", n, {}, {}};
  const auto trees = enumerate_trees(n);
  Labelling identity{std::vector<int>(static_cast<std::size_t>(n))};
  for (int x = 1; x <= n; ++x) identity.perm[static_cast<std::size_t>(x - 1)] = x;

  CheckResult canonical{"tree_images_canonical_and_admissible"};
  CheckResult pattern_free{"tree_images_2p2_and_n_free"};
  std::set<Poset> images;
  for (const auto& t : trees) {
    ++canonical.cases;
    ++pattern_free.cases;
    IntervalOrder image = canonical_form(Poset::antichain(n));
    try {
      image = tree_to_poset(t);
    } catch (const InvariantViolation& e) {
      canonical.fail({{"tree", to_json(t)}, {"error", e.what()}});
      continue;
    }
    const Poset& p = image.poset();
    if (canonical_form(p).poset() != p || !is_admissible(p, identity)) {
      canonical.fail({{"tree", to_json(t)}, {"poset", to_json(p)}});
    }
    if (contains_induced(p, PatternId::kTwoPlusTwo) ||
        contains_induced(p, PatternId::kFenceN)) {
      pattern_free.fail({{"tree", to_json(t)}, {"poset", to_json(p)}});
    }
    images.insert(canonical_form(p).poset());
  }

  CheckResult injective{"tree_images_distinct"};
  injective.cases = trees.size();
  if (images.size() != trees.size()) {
    injective.fail({{"trees", trees.size()}, {"distinct_images", images.size()}});
  }

  CheckResult equal{"tree_images_equal_sp_catalog"};
  std::set<Poset> sp;
  for (std::size_t i : sp_indices(cat)) sp.insert(cat[i].poset());
  for (const auto& p : images) {
    ++equal.cases;
    if (!sp.contains(p)) equal.fail({{"image_not_in_catalog", to_json(p)}});
  }
  for (const auto& p : sp) {
    ++equal.cases;
    if (!images.contains(p)) equal.fail({{"catalog_member_without_tree", to_json(p)}});
  }
  report.notes.push_back("trees: " + std::to_string(trees.size()) +
                         ", series-parallel catalog members: " +
                         std::to_string(sp.size()));
  report.checks.push_back(std::move(canonical));
  report.checks.push_back(std::move(pattern_free));
  report.checks.push_back(std::move(injective));
  report.checks.push_back(std::move(equal));
  return report;
}

namespace {

nlohmann::ordered_json pair_json(const IntervalOrder& a, const IntervalOrder& b) {
  return {{"a", to_json(a.poset())}, {"b", to_json(b.poset())}};
}

}  // namespace

VerificationReport verify_tamari_restriction(int n, const Catalog& cat) {
  require_catalog(n, cat);
  VerificationReport report{"tamari", n, {}, {}};
  const auto sp = sp_indices(cat);
  const OrderMatrix order(cat);
  std::vector<bool> in_sp(cat.size(), false);
  for (std::size_t i : sp) in_sp[i] = true;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  CheckResult count{"sp_size_is_catalan"};
  count.cases = 1;
  const std::size_t trees = enumerate_trees(n).size();
  const nlohmann::ordered_json sizes = {{"sp_members", sp.size()}, {"planar_trees", trees}};
  if (sp.size() != trees) {
    count.fail(sizes);
  } else {
    count.witness = sizes;
  }

  CheckResult agree{"leq_T_equals_down_set_order"};
  CheckResult lattice{"sp_restriction_is_lattice"};
  CheckResult meets{"sp_meet_is_global_meet"};
  std::size_t join_differs = 0;
  for (std::size_t i : sp) {
    for (std::size_t j : sp) {
      const IntervalOrder& a = cat[i];
      const IntervalOrder& b = cat[j];
      ++agree.cases;
      if (leq_T(a, b) != leq_by_down_sets(a, b)) agree.fail(pair_json(a, b));

      const std::size_t g = order_glb(order, i, j, in_sp);
      const std::size_t l = order_lub(order, i, j, in_sp);
      ++lattice.cases;
      if (g == kNone || l == kNone) {
        lattice.fail(pair_json(a, b));
        continue;
      }
      ++meets.cases;
      try {
        if (cat.find(meet(a, b).poset()) != g) meets.fail(pair_json(a, b));
      } catch (const InvariantViolation& e) {
        auto w = pair_json(a, b);
        w["error"] = e.what();
        meets.fail(std::move(w));
      }
      if (l != order_lub(order, i, j)) ++join_differs;
    }
  }
  report.notes.push_back("ordered sp pairs whose restricted join differs from the global join: " +
                         std::to_string(join_differs));
  report.checks.push_back(std::move(count));
  report.checks.push_back(std::move(agree));
  report.checks.push_back(std::move(lattice));
  report.checks.push_back(std::move(meets));
  return report;
}

VerificationReport verify_meet_subsemilattice(int n, const Catalog& cat) {
  require_catalog(n, cat);
  VerificationReport report{"meetsub", n, {}, {}};
  const auto sp = sp_indices(cat);

  CheckResult closed{"sp_meet_is_n_free"};
  CheckResult witness{"sp_join_leaves_sp"};
  bool found = false;
  for (std::size_t a = 0; a < sp.size(); ++a) {
    for (std::size_t b = a; b < sp.size(); ++b) {
      const IntervalOrder& p1 = cat[sp[a]];
      const IntervalOrder& p2 = cat[sp[b]];
      ++closed.cases;
      try {
        const IntervalOrder m = meet(p1, p2);
        if (auto w = contains_induced(m.poset(), PatternId::kFenceN)) {
          auto payload = pair_json(p1, p2);
          payload["meet"] = to_json(m.poset());
          payload["fence"] = witness_json(*w);
          closed.fail(std::move(payload));
        }
      } catch (const InvariantViolation& e) {
        auto payload = pair_json(p1, p2);
        payload["error"] = e.what();
        closed.fail(std::move(payload));
      }
      if (found) continue;
      ++witness.cases;
      try {
        const IntervalOrder j = join(p1, p2, cat);
        if (auto w = contains_induced(j.poset(), PatternId::kFenceN)) {
          found = true;
          witness.witness = pair_json(p1, p2);
          witness.witness["join"] = to_json(j.poset());
          witness.witness["fence"] = witness_json(*w);
        }
      } catch (const InvariantViolation&) {
        // A join outside the catalog is reported by the lattice suite.
      }
    }
  }
  if (n >= 4) {
    if (!found) witness.fail({{"searched_pairs", witness.cases}});
  } else {
    report.notes.push_back("no join witness possible below 4 elements");
  }
  report.checks.push_back(std::move(closed));
  report.checks.push_back(std::move(witness));
  return report;
}

}  // namespace ivorder
