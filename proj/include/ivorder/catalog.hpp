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

#ifndef IVORDER_CATALOG_HPP_
#define IVORDER_CATALOG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ivorder/interval.hpp"

namespace ivorder {

// Canonical interval orders of one size, sorted by flattened lt matrix,
// without duplicates.
class Catalog {
 public:
  // Sorts and deduplicates. Throws kSizeMismatch if a member has size != n.
  Catalog(int n, std::vector<IntervalOrder> members, bool sp_only = false);

  int n() const { return n_; }
  bool sp_only() const { return sp_only_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<IntervalOrder>& members() const { return members_; }
  const IntervalOrder& operator[](std::size_t i) const { return members_[i]; }

  std::optional<std::size_t> find(const Poset& p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  int n_;
  bool sp_only_;
  std::vector<IntervalOrder> members_;
  std::map<Poset, std::size_t> index_;
};

}  // namespace ivorder

#endif  // IVORDER_CATALOG_HPP_
