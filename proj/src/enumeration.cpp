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

#include "ivorder/enumeration.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "ivorder/error.hpp"
#include "ivorder/io.hpp"

namespace ivorder {

Catalog::Catalog(int n, std::vector<IntervalOrder> members, bool sp_only)
    : n_(n), sp_only_(sp_only), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != n_) {
      throw Error(ErrorKind::kSizeMismatch,
                  "catalog of size " + std::to_string(n_) +
                      " given a member of size " + std::to_string(m.size()));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    index_.emplace(members_[i].poset(), i);
  }
}

std::optional<std::size_t> Catalog::find(const Poset& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

namespace {

using Bits = ElementSet::Bits;

std::vector<Bits> closed_subsets(const Poset& p, bool downward) {
  const int n = p.size();
  std::vector<Bits> out;
  for (Bits mask = 0; mask < (Bits{1} << n); ++mask) {
    bool closed = true;
    for (Bits b = mask; b != 0 && closed; b &= b - 1) {
      const int x = std::countr_zero(b) + 1;
      const Bits reach = downward ? p.below(x).bits() : p.above(x).bits();
      closed = (reach & ~mask) == 0;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

}  // namespace

std::vector<IntervalOrder> one_point_extensions(const IntervalOrder& order) {
  const Poset& p = order.poset();
  const int n = p.size();
  if (n + 1 > kMaxElements) {
    throw Error(ErrorKind::kResourceLimit, "cannot extend beyond " +
                                               std::to_string(kMaxElements) +
                                               " elements");
  }
  const Bits all = ElementSet::full(n).bits();
  const Bits z_bit = Bits{1} << n;

  std::vector<Bits> downs = closed_subsets(p, true);
  // The new element's down-set stays a principal down-set of every element
  // outside its up-set, so it must be comparable with all existing ones.
  std::erase_if(downs, [&](Bits d) {
    for (int x = 1; x <= n; ++x) {
      const Bits ix = p.below(x).bits();
      if ((ix & ~d) != 0 && (d & ~ix) != 0) return true;
    }
    return false;
  });
  const std::vector<Bits> ups = closed_subsets(p, false);

  std::set<IntervalOrder> found;
  std::vector<Bits> rows(static_cast<std::size_t>(n) + 1);
  for (Bits d : downs) {
    Bits allowed = all & ~d;
    for (Bits b = d; b != 0; b &= b - 1) {
      allowed &= p.above(std::countr_zero(b) + 1).bits();
    }
    for (Bits u : ups) {
      if ((u & ~allowed) != 0) continue;
      for (int x = 1; x <= n; ++x) {
        rows[static_cast<std::size_t>(x - 1)] =
            p.above(x).bits() | ((d >> (x - 1) & 1U) != 0 ? z_bit : 0);
      }
      rows[static_cast<std::size_t>(n)] = u;
      const Poset ext = Poset::from_up_rows(n + 1, rows);
      if (is_interval_order(ext)) found.insert(canonical_form(ext));
    }
  }
  return {found.begin(), found.end()};
}

Catalog enumerate(int n, const EnumerateOptions& opts) {
  if (n < 1) {
    throw Error(ErrorKind::kShape, "enumeration size must be at least 1");
  }
  if (n > opts.max_n) {
    throw Error(ErrorKind::kResourceLimit,
                "enumeration size " + std::to_string(n) +
                    " exceeds configured maximum " + std::to_string(opts.max_n));
  }
  std::vector<IntervalOrder> level{canonical_form(Poset::antichain(1))};
  for (int k = 1; k < n; ++k) {
    std::set<IntervalOrder> next;
    auto extend = [&next](const IntervalOrder& parent) {
      for (auto& child : one_point_extensions(parent)) {
        next.insert(std::move(child));
      }
    };
    if (opts.reverse_parents) {
      std::for_each(level.rbegin(), level.rend(), extend);
    } else {
      std::for_each(level.begin(), level.end(), extend);
    }
    level.assign(std::make_move_iterator(next.begin()),
                 std::make_move_iterator(next.end()));
  }
  return Catalog(n, std::move(level));
}

Catalog sp_filter(const Catalog& cat) {
  std::vector<IntervalOrder> kept;
  for (const auto& m : cat) {
    if (!contains_induced(m.poset(), PatternId::kFenceN)) kept.push_back(m);
  }
  return Catalog(cat.n(), std::move(kept), true);
}

VerificationReport verify_labelling(const Catalog& cat, int relabellings,
                                    std::uint64_t seed, const Catalog* smaller) {
  VerificationReport report{"labelling", cat.n(), {}, {}};
  const int n = cat.n();
  Labelling identity{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(identity.perm.begin(), identity.perm.end(), 1);

  CheckResult admissible{"identity_labelling_admissible"};
  CheckResult recognised{"members_are_interval_orders"};
  CheckResult invariant{"canonical_form_invariant_under_relabelling"};
  CheckResult deletion{"deleting_last_element_stays_in_catalog"};
  std::mt19937_64 rng(seed);
  std::vector<int> perm(identity.perm);
  for (const auto& m : cat) {
    const Poset& p = m.poset();
    ++admissible.cases;
    ++recognised.cases;
    if (!is_interval_order(p) || contains_induced(p, PatternId::kTwoPlusTwo)) {
      recognised.fail(to_json(p));
    }
    if (!is_admissible(p, identity)) admissible.fail(to_json(p));
    for (int r = 0; r < relabellings; ++r) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ++invariant.cases;
      const Poset shuffled = p.relabel(perm);
      if (canonical_form(shuffled).poset() != p) {
        invariant.fail({{"member", to_json(p)}, {"relabelled", to_json(shuffled)}});
      }
    }
    if (smaller != nullptr && n > 1) {
      ++deletion.cases;
      const Poset rest = restrict(p, ElementSet::full(n - 1));
      if (!smaller->find(canonical_form(rest).poset())) {
        deletion.fail({{"member", to_json(p)}, {"after_deletion", to_json(rest)}});
      }
    }
  }
  report.checks.push_back(std::move(recognised));
  report.checks.push_back(std::move(admissible));
  report.checks.push_back(std::move(invariant));
  if (smaller != nullptr && n > 1) report.checks.push_back(std::move(deletion));
  return report;
}

}  // namespace ivorder
