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

#include "ivorder/poset.hpp"

#include <algorithm>
#include <string>

#include "ivorder/error.hpp"

namespace ivorder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "Shape";
    case ErrorKind::kReflexivity: return "Reflexivity";
    case ErrorKind::kAntisymmetry: return "Antisymmetry";
    case ErrorKind::kTransitivity: return "Transitivity";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kEmptySubset: return "EmptySubset";
    case ErrorKind::kNotAnIntervalOrder: return "NotAnIntervalOrder";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kMalformedInterval: return "MalformedInterval";
    case ErrorKind::kMalformedTree: return "MalformedTree";
    case ErrorKind::kResourceLimit: return "ResourceLimit";
    case ErrorKind::kFormat: return "Format";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Bits b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxElements) {
    throw Error(ErrorKind::kShape, "poset size " + std::to_string(n) +
                                       " outside 1.." +
                                       std::to_string(kMaxElements));
  }
}

std::string pair_text(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

Poset Poset::from_up_rows(int n, std::span<const ElementSet::Bits> above) {
  check_size(n);
  if (static_cast<int>(above.size()) != n) {
    throw Error(ErrorKind::kShape, "expected " + std::to_string(n) + " rows");
  }
  const ElementSet::Bits mask = ElementSet::full(n).bits();
  Poset p;
  p.n_ = n;
  for (int x = 1; x <= n; ++x) {
    if ((above[x - 1] & ~mask) != 0) {
      throw Error(ErrorKind::kOutOfRange,
                  "row " + std::to_string(x) + " names elements beyond n");
    }
    p.up_[x - 1] = above[x - 1];
  }
  for (int x = 1; x <= n; ++x) {
    if (p.less(x, x)) {
      throw Error(ErrorKind::kReflexivity, "element " + std::to_string(x) +
                                               " is strictly below itself",
                  {x});
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (p.less(x, y) && p.less(y, x)) {
        throw Error(ErrorKind::kAntisymmetry,
                    "both " + pair_text(x, y) + " and " + pair_text(y, x),
                    {x, y});
      }
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y : p.above(x).members()) {
      const ElementSet missing(p.up_[y - 1] & ~p.up_[x - 1]);
      if (!missing.empty()) {
        const int z = missing.members().front();
        throw Error(ErrorKind::kTransitivity,
                    "relation not transitive at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")",
                    {x, y, z});
      }
    }
  }
  p.fill_down_rows();
  return p;
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& lt) {
  const int n = static_cast<int>(lt.size());
  check_size(n);
  std::vector<ElementSet::Bits> rows(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x) {
    const auto& row = lt[static_cast<std::size_t>(x - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::kShape, "relation matrix is not square");
    }
    for (int y = 1; y <= n; ++y) {
      if (row[static_cast<std::size_t>(y - 1)]) {
        rows[static_cast<std::size_t>(x - 1)] |= ElementSet::Bits{1} << (y - 1);
      }
    }
  }
  return from_up_rows(n, rows);
}

Poset Poset::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  check_size(n);
  std::vector<ElementSet::Bits> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n) {
      throw Error(ErrorKind::kOutOfRange,
                  "pair " + pair_text(x, y) + " outside 1.." + std::to_string(n),
                  {x, y});
    }
    rows[static_cast<std::size_t>(x - 1)] |= ElementSet::Bits{1} << (y - 1);
  }
  return from_up_rows(n, rows);
}

Poset Poset::antichain(int n) {
  check_size(n);
  Poset p;
  p.n_ = n;
  return p;
}

Poset Poset::chain(int n) {
  check_size(n);
  Poset p;
  p.n_ = n;
  const ElementSet::Bits all = ElementSet::full(n).bits();
  for (int x = 1; x <= n; ++x) {
    p.up_[x - 1] = all & ~ElementSet::full(x).bits();
  }
  p.fill_down_rows();
  return p;
}

void Poset::fill_down_rows() {
  down_.fill(0);
  for (int x = 1; x <= n_; ++x) {
    for (ElementSet::Bits b = up_[x - 1]; b != 0; b &= b - 1) {
      down_[std::countr_zero(b)] |= ElementSet::Bits{1} << (x - 1);
    }
  }
}

ElementSet Poset::down_set(int x) const {
  if (x < 1 || x > n_) {
    throw Error(ErrorKind::kOutOfRange,
                "element " + std::to_string(x) + " not in 1.." + std::to_string(n_),
                {x});
  }
  return below(x);
}

ElementSet Poset::up_set(int x) const {
  if (x < 1 || x > n_) {
    throw Error(ErrorKind::kOutOfRange,
                "element " + std::to_string(x) + " not in 1.." + std::to_string(n_),
                {x});
  }
  return above(x);
}

std::vector<std::pair<int, int>> Poset::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= n_; ++x) {
    for (int y : above(x).members()) out.emplace_back(x, y);
  }
  return out;
}

int Poset::relation_size() const {
  int total = 0;
  for (int x = 0; x < n_; ++x) total += std::popcount(up_[x]);
  return total;
}

std::vector<std::vector<bool>> Poset::matrix() const {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n_),
                                   std::vector<bool>(static_cast<std::size_t>(n_)));
  for (int x = 1; x <= n_; ++x) {
    for (int y = 1; y <= n_; ++y) {
      m[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = less(x, y);
    }
  }
  return m;
}

Poset Poset::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::kShape, "relabelling has wrong length");
  }
  ElementSet seen;
  for (int v : perm) {
    if (v < 1 || v > n_ || seen.contains(v)) {
      throw Error(ErrorKind::kShape, "relabelling is not a permutation");
    }
    seen.insert(v);
  }
  Poset q;
  q.n_ = n_;
  for (int x = 1; x <= n_; ++x) {
    ElementSet::Bits row = 0;
    for (ElementSet::Bits b = up_[x - 1]; b != 0; b &= b - 1) {
      row |= ElementSet::Bits{1} << (perm[static_cast<std::size_t>(std::countr_zero(b))] - 1);
    }
    q.up_[static_cast<std::size_t>(perm[static_cast<std::size_t>(x - 1)] - 1)] = row;
  }
  q.fill_down_rows();
  return q;
}

bool Poset::contains_relation(const Poset& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorKind::kSizeMismatch, "posets have different sizes");
  }
  for (int x = 0; x < n_; ++x) {
    if ((other.up_[x] & ~up_[x]) != 0) return false;
  }
  return true;
}

std::strong_ordering Poset::operator<=>(const Poset& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  for (int x = 0; x < n_; ++x) {
    const ElementSet::Bits diff = up_[x] ^ other.up_[x];
    if (diff == 0) continue;
    // First differing column in row-major order decides; true sorts after.
    const ElementSet::Bits first = diff & (~diff + 1);
    return (up_[x] & first) != 0 ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool Poset::operator==(const Poset& other) const {
  return n_ == other.n_ &&
         std::equal(up_.begin(), up_.begin() + n_, other.up_.begin());
}

Poset validate_poset(const std::vector<std::vector<bool>>& lt) {
  return Poset::from_matrix(lt);
}

ElementSet down_set(const Poset& p, int x) { return p.down_set(x); }
ElementSet up_set(const Poset& p, int x) { return p.up_set(x); }

namespace {

bool matches(const Poset& p, const PatternWitness& w, PatternId pat) {
  // Relations required among (a, b, c, d), indexed 0..3.
  static constexpr std::array<std::array<bool, 4>, 4> kTwoPlusTwo = {{
      {false, true, false, false},
      {false, false, false, false},
      {false, false, false, true},
      {false, false, false, false},
  }};
  static constexpr std::array<std::array<bool, 4>, 4> kFence = {{
      {false, false, true, false},
      {false, false, true, true},
      {false, false, false, false},
      {false, false, false, false},
  }};
  const auto& want = pat == PatternId::kTwoPlusTwo ? kTwoPlusTwo : kFence;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j && p.less(w[i], w[j]) != want[i][j]) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PatternWitness> contains_induced(const Poset& p, PatternId pat) {
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          PatternWitness w{a, b, c, d};
          do {
            if (matches(p, w, pat)) return w;
          } while (std::next_permutation(w.begin(), w.end()));
        }
      }
    }
  }
  return std::nullopt;
}

bool order_equivalent(const Poset& p, int x, int y) {
  return p.down_set(x) == p.down_set(y) && p.up_set(x) == p.up_set(y);
}

Poset restrict(const Poset& p, ElementSet s) {
  if (s.empty()) {
    throw Error(ErrorKind::kEmptySubset, "cannot restrict to the empty set");
  }
  if (!s.is_subset_of(ElementSet::full(p.size()))) {
    throw Error(ErrorKind::kOutOfRange, "subset names elements beyond n");
  }
  const std::vector<int> keep = s.members();
  const int m = static_cast<int>(keep.size());
  std::vector<ElementSet::Bits> rows(keep.size(), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.less(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)] |= ElementSet::Bits{1} << j;
      }
    }
  }
  return Poset::from_up_rows(m, rows);
}

}  // namespace ivorder
