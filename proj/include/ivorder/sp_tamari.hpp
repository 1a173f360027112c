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

#ifndef IVORDER_SP_TAMARI_HPP_
#define IVORDER_SP_TAMARI_HPP_

#include <vector>

#include "ivorder/catalog.hpp"
#include "ivorder/interval.hpp"
#include "ivorder/report.hpp"

namespace ivorder {

// Rooted planar tree whose nodes are numbered in preorder, root 0 and the
// other nodes 1..n. Children are kept left to right.
class PlanarTree {
 public:
  // parent[k-1] is the parent of node k (k = 1..n). Throws kMalformedTree
  // unless the numbering is a preorder: each node's parent is on the path
  // from the root to node k-1.
  static PlanarTree from_parents(std::vector<int> parent);

  // Node k hangs at depth depth[k-1] (root depth 0). A sequence is valid
  // when depth[0] == 1 and depth[k] <= depth[k-1] + 1.
  static PlanarTree from_depths(const std::vector<int>& depth);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int k) const { return parent_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& children(int k) const {
    return children_[static_cast<std::size_t>(k)];
  }
  // u(k): the proper descendants of k, which in preorder are exactly the
  // nodes k+1 .. k+subtree_size(k)-1.
  ElementSet descendants(int k) const;
  int subtree_size(int k) const { return subtree_[static_cast<std::size_t>(k)]; }

  bool operator==(const PlanarTree& other) const { return parent_ == other.parent_; }

 private:
  PlanarTree() = default;

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> subtree_;
};

// x<y iff x comes before y in preorder and y is not a descendant of x. The
// preorder labels are returned untouched; they already form the canonical
// admissible labelling (validated, InvariantViolation otherwise).
IntervalOrder tree_to_poset(const PlanarTree& tree);

// Every planar tree with n non-root nodes, in lexicographic order of depth
// sequences. Catalan(n) of them.
std::vector<PlanarTree> enumerate_trees(int n);

// Tree images coincide with the N-free members of the catalog, and each
// image is already canonical.
VerificationReport verify_sp_correspondence(int n, const Catalog& cat);

// ≤_T restricted to series-parallel members agrees with down-set
// containment, is a lattice with Catalan(n) elements, and its meet is the
// global meet.
VerificationReport verify_tamari_restriction(int n, const Catalog& cat);

// Meets of series-parallel pairs stay N-free; also searches for a
// series-parallel pair whose global join contains an induced N.
VerificationReport verify_meet_subsemilattice(int n, const Catalog& cat);

}  // namespace ivorder

#endif  // IVORDER_SP_TAMARI_HPP_
