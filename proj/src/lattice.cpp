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

#include "ivorder/lattice.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "ivorder/error.hpp"
#include "ivorder/io.hpp"

namespace ivorder {

namespace {

using Bits = ElementSet::Bits;

void require_same_size(const IntervalOrder& a, const IntervalOrder& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                "interval orders of sizes " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
}

}  // namespace

bool leq_T(const IntervalOrder& a, const IntervalOrder& b) {
  require_same_size(a, b);
  return a.poset().contains_relation(b.poset());
}

bool leq_by_up_sets(const IntervalOrder& a, const IntervalOrder& b) {
  require_same_size(a, b);
  for (int x = 1; x <= a.size(); ++x) {
    if (!b.poset().above(x).is_subset_of(a.poset().above(x))) return false;
  }
  return true;
}

bool leq_by_down_sets(const IntervalOrder& a, const IntervalOrder& b) {
  require_same_size(a, b);
  for (int x = 1; x <= a.size(); ++x) {
    if (!b.poset().below(x).is_subset_of(a.poset().below(x))) return false;
  }
  return true;
}

IntervalOrder meet(const IntervalOrder& a, const IntervalOrder& b) {
  require_same_size(a, b);
  const int n = a.size();
  std::vector<Bits> rows(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    rows[static_cast<std::size_t>(x - 1)] =
        a.poset().above(x).bits() | b.poset().above(x).bits();
  }
  try {
    return IntervalOrder::from_canonical(Poset::from_up_rows(n, rows));
  } catch (const Error& e) {
    throw InvariantViolation(
        std::string("union of two canonical interval orders is not a "
                    "canonical interval order: ") + e.what());
  }
}

IntervalOrder join(const IntervalOrder& a, const IntervalOrder& b,
                   const Catalog& cat) {
  require_same_size(a, b);
  const int n = a.size();
  if (cat.n() != n) {
    throw Error(ErrorKind::kSizeMismatch,
                "catalog has size " + std::to_string(cat.n()) +
                    " but operands have size " + std::to_string(n));
  }
  std::vector<Bits> common(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    common[static_cast<std::size_t>(x - 1)] =
        a.poset().above(x).bits() & b.poset().above(x).bits();
  }
  std::vector<Bits> acc(static_cast<std::size_t>(n), 0);
  for (const auto& m : cat) {
    bool inside = true;
    for (int x = 1; x <= n && inside; ++x) {
      inside = (m.poset().above(x).bits() & ~common[static_cast<std::size_t>(x - 1)]) == 0;
    }
    if (!inside) continue;
    for (int x = 1; x <= n; ++x) {
      acc[static_cast<std::size_t>(x - 1)] |= m.poset().above(x).bits();
    }
  }
  try {
    const Poset result = Poset::from_up_rows(n, acc);
    if (auto idx = cat.find(result)) return cat[*idx];
    throw InvariantViolation("join of two members is not a catalog member: " +
                             to_json(result).dump());
  } catch (const Error& e) {
    throw InvariantViolation(std::string("join is not a poset: ") + e.what());
  }
}

OrderMatrix::OrderMatrix(const Catalog& cat)
    : size_(cat.size()),
      words_((cat.size() + 63) / 64),
      rows_(size_ * words_, 0),
      cols_(size_ * words_, 0) {
  for (std::size_t i = 0; i < size_; ++i) {
    const Poset& pi = cat[i].poset();
    for (std::size_t j = 0; j < size_; ++j) {
      if (pi.contains_relation(cat[j].poset())) {
        rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        cols_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

std::vector<std::uint64_t> OrderMatrix::up_row(std::size_t i) const {
  return {rows_.begin() + static_cast<std::ptrdiff_t>(i * words_),
          rows_.begin() + static_cast<std::ptrdiff_t>((i + 1) * words_)};
}

std::vector<std::uint64_t> OrderMatrix::down_row(std::size_t i) const {
  return {cols_.begin() + static_cast<std::ptrdiff_t>(i * words_),
          cols_.begin() + static_cast<std::ptrdiff_t>((i + 1) * words_)};
}

LatticeDiagram build_lattice(const Catalog& cat) {
  const OrderMatrix order(cat);
  const std::size_t size = cat.size();
  const std::size_t words = order.words();

  LatticeDiagram diag{cat.n(), size, {}};
  std::vector<std::size_t> uppers;
  for (std::size_t a = 0; a < size; ++a) {
    uppers.clear();
    for (std::size_t b = 0; b < size; ++b) {
      if (b != a && order.leq(a, b)) uppers.push_back(b);
    }
    // Larger relations sit closer to a, so anything strictly between a and
    // b is visited before b.
    std::stable_sort(uppers.begin(), uppers.end(), [&](std::size_t x, std::size_t y) {
      return cat[x].poset().relation_size() > cat[y].poset().relation_size();
    });
    std::vector<std::uint64_t> reached(words, 0);
    for (std::size_t b : uppers) {
      if ((reached[b / 64] >> (b % 64)) & 1U) continue;
      diag.covers.emplace_back(a, b);
      const auto row = order.up_row(b);
      for (std::size_t w = 0; w < words; ++w) reached[w] |= row[w];
    }
  }
  std::sort(diag.covers.begin(), diag.covers.end());
  return diag;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t unique_extreme(const OrderMatrix& order,
                           std::vector<std::uint64_t> bounds,
                           const std::vector<bool>& subset, bool greatest) {
  if (!subset.empty()) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (!subset[k]) bounds[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    }
  }
  std::size_t found = kNone;
  for (std::size_t w = 0; w < bounds.size(); ++w) {
    for (std::uint64_t bits = bounds[w]; bits != 0; bits &= bits - 1) {
      const std::size_t g = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      // Greatest lower bound: every lower bound lies below g.
      const auto reach = greatest ? order.down_row(g) : order.up_row(g);
      bool dominates = true;
      for (std::size_t v = 0; v < bounds.size() && dominates; ++v) {
        dominates = (bounds[v] & ~reach[v]) == 0;
      }
      if (dominates) {
        if (found != kNone) return kNone;
        found = g;
      }
    }
  }
  return found;
}

std::vector<std::uint64_t> and_rows(std::vector<std::uint64_t> a,
                                    const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
  return a;
}

}  // namespace

std::size_t order_glb(const OrderMatrix& order, std::size_t i, std::size_t j,
                      const std::vector<bool>& subset) {
  return unique_extreme(order, and_rows(order.down_row(i), order.down_row(j)),
                        subset, true);
}

std::size_t order_lub(const OrderMatrix& order, std::size_t i, std::size_t j,
                      const std::vector<bool>& subset) {
  return unique_extreme(order, and_rows(order.up_row(i), order.up_row(j)),
                        subset, false);
}

namespace {

nlohmann::ordered_json pair_witness(const Catalog& cat, std::size_t i,
                                    std::size_t j) {
  return {{"a", to_json(cat[i].poset())}, {"b", to_json(cat[j].poset())}};
}

}  // namespace

namespace {

// Index of the member equal to meet/join of i and j, or kNone when the
// operation leaves the catalog (InvariantViolation) or an operand is kNone.
struct Operations {
  const Catalog& cat;

  std::size_t meet_index(std::size_t i, std::size_t j) const {
    if (i == kNone || j == kNone) return kNone;
    try {
      return cat.find(meet(cat[i], cat[j]).poset()).value_or(kNone);
    } catch (const InvariantViolation&) {
      return kNone;
    }
  }
  std::size_t join_index(std::size_t i, std::size_t j) const {
    if (i == kNone || j == kNone) return kNone;
    try {
      return cat.find(join(cat[i], cat[j], cat).poset()).value_or(kNone);
    } catch (const InvariantViolation&) {
      return kNone;
    }
  }
};

nlohmann::ordered_json union_witness(const Catalog& cat, std::size_t i,
                                     std::size_t j) {
  auto w = pair_witness(cat, i, j);
  std::vector<ElementSet::Bits> rows;
  for (int x = 1; x <= cat.n(); ++x) {
    rows.push_back(cat[i].poset().above(x).bits() | cat[j].poset().above(x).bits());
  }
  const Poset u = Poset::from_up_rows(cat.n(), rows);
  w["union"] = to_json(u);
  w["union_is_interval_order"] = is_interval_order(u);
  w["union_canonical_form"] = to_json(canonical_form(u).poset());
  return w;
}

struct PairChecks {
  CheckResult bounds{"order_has_glb_and_lub"};
  CheckResult glb{"meet_is_glb"};
  CheckResult lub{"join_is_lub"};
  CheckResult comm{"commutativity"};
  CheckResult idem{"idempotence"};
  CheckResult absorb{"absorption"};
  CheckResult assoc{"associativity"};

  void check_bounds(const Catalog& cat, const OrderMatrix& order, std::size_t i,
                    std::size_t j, std::size_t m, std::size_t jn) {
    ++bounds.cases;
    ++glb.cases;
    ++lub.cases;
    const std::size_t g = order_glb(order, i, j);
    const std::size_t l = order_lub(order, i, j);
    if (g == kNone || l == kNone) {
      auto w = pair_witness(cat, i, j);
      w["has_glb"] = g != kNone;
      w["has_lub"] = l != kNone;
      bounds.fail(std::move(w));
    }
    if (m == kNone || m != g) glb.fail(union_witness(cat, i, j));
    if (jn == kNone || jn != l) lub.fail(pair_witness(cat, i, j));
  }

  template <typename Meet, typename Join>
  void check_pair_laws(const Catalog& cat, std::size_t i, std::size_t j,
                       Meet mt, Join jt) {
    ++comm.cases;
    ++absorb.cases;
    const std::size_t m = mt(i, j), jn = jt(i, j);
    if (m == kNone || jn == kNone || m != mt(j, i) || jn != jt(j, i)) {
      comm.fail(pair_witness(cat, i, j));
    }
    if (mt(i, jn) != i || jt(i, m) != i) absorb.fail(pair_witness(cat, i, j));
  }

  template <typename Meet, typename Join>
  void check_idempotence(const Catalog& cat, std::size_t i, Meet mt, Join jt) {
    ++idem.cases;
    if (mt(i, i) != i || jt(i, i) != i) idem.fail(pair_witness(cat, i, i));
  }

  template <typename Meet, typename Join>
  void check_triple(const Catalog& cat, std::size_t i, std::size_t j,
                    std::size_t k, Meet mt, Join jt) {
    ++assoc.cases;
    const std::size_t ml = mt(mt(i, j), k), mr = mt(i, mt(j, k));
    const std::size_t jl = jt(jt(i, j), k), jr = jt(i, jt(j, k));
    if (ml == kNone || ml != mr || jl == kNone || jl != jr) {
      auto w = pair_witness(cat, i, j);
      w["c"] = to_json(cat[k].poset());
      assoc.fail(std::move(w));
    }
  }

  void append(VerificationReport& report) {
    for (auto* c : {&bounds, &glb, &lub, &comm, &idem, &absorb, &assoc}) {
      report.checks.push_back(std::move(*c));
    }
  }
};

void check_laws_exhaustive(const Catalog& cat, const OrderMatrix& order,
                           VerificationReport& report) {
  const std::size_t size = cat.size();
  const Operations ops{cat};
  std::vector<std::size_t> meet_tab(size * size), join_tab(size * size);
  PairChecks checks;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      meet_tab[i * size + j] = ops.meet_index(i, j);
      join_tab[i * size + j] = ops.join_index(i, j);
      checks.check_bounds(cat, order, i, j, meet_tab[i * size + j],
                          join_tab[i * size + j]);
    }
  }
  auto mt = [&](std::size_t i, std::size_t j) {
    return i == kNone || j == kNone ? kNone : meet_tab[i * size + j];
  };
  auto jt = [&](std::size_t i, std::size_t j) {
    return i == kNone || j == kNone ? kNone : join_tab[i * size + j];
  };
  for (std::size_t i = 0; i < size; ++i) {
    checks.check_idempotence(cat, i, mt, jt);
    for (std::size_t j = 0; j < size; ++j) {
      checks.check_pair_laws(cat, i, j, mt, jt);
      for (std::size_t k = 0; k < size; ++k) {
        checks.check_triple(cat, i, j, k, mt, jt);
      }
    }
  }
  checks.append(report);
}

void check_laws_sampled(const Catalog& cat, const OrderMatrix& order,
                        const LatticeVerifyOptions& opts,
                        VerificationReport& report) {
  const std::size_t size = cat.size();
  const Operations ops{cat};
  auto mt = [&ops](std::size_t i, std::size_t j) { return ops.meet_index(i, j); };
  auto jt = [&ops](std::size_t i, std::size_t j) { return ops.join_index(i, j); };
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, size - 1);
  PairChecks checks;
  for (std::uint64_t s = 0; s < opts.sample_pairs; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    checks.check_bounds(cat, order, i, j, mt(i, j), jt(i, j));
    checks.check_pair_laws(cat, i, j, mt, jt);
    checks.check_idempotence(cat, i, mt, jt);
  }
  for (std::uint64_t s = 0; s < opts.sample_triples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    checks.check_triple(cat, i, j, k, mt, jt);
  }
  checks.append(report);
  report.notes.push_back("sampled " + std::to_string(opts.sample_pairs) +
                         " pairs and " + std::to_string(opts.sample_triples) +
                         " triples, seed " + std::to_string(opts.seed));
}

}  // namespace

VerificationReport verify_lattice(const LatticeDiagram& diag,
                                  const Catalog& cat,
                                  const LatticeVerifyOptions& opts) {
  VerificationReport report{"lattice", cat.n(), {}, {}};
  const std::size_t size = cat.size();

  CheckResult shape{"diagram_matches_catalog"};
  shape.cases = 1;
  if (diag.n != cat.n() || diag.nodes != size) {
    shape.passed = false;
    shape.witness = {{"diagram_n", diag.n}, {"diagram_nodes", diag.nodes},
                     {"catalog_n", cat.n()}, {"catalog_size", size}};
    report.checks.push_back(std::move(shape));
    return report;
  }
  report.checks.push_back(std::move(shape));

  const OrderMatrix order(cat);

  // Reflexive-transitive closure of the covers must reproduce ≤_T, and no
  // cover may be implied by two others.
  CheckResult reduction{"covers_are_transitive_reduction"};
  {
    const std::size_t words = order.words();
    std::vector<std::vector<std::size_t>> succ(size);
    for (const auto& [lo, hi] : diag.covers) {
      if (lo >= size || hi >= size) {
        reduction.passed = false;
        reduction.witness = {{"cover", {lo, hi}}};
        break;
      }
      succ[lo].push_back(hi);
    }
    // Members sorted by decreasing relation size form a linear extension
    // of ≤_T, so closing in reverse order sees successors first.
    std::vector<std::size_t> topo(size);
    for (std::size_t k = 0; k < size; ++k) topo[k] = k;
    std::stable_sort(topo.begin(), topo.end(), [&](std::size_t x, std::size_t y) {
      return cat[x].poset().relation_size() > cat[y].poset().relation_size();
    });
    std::vector<std::vector<std::uint64_t>> reach(size, std::vector<std::uint64_t>(words, 0));
    for (auto it = topo.rbegin(); it != topo.rend() && reduction.passed; ++it) {
      const std::size_t a = *it;
      reach[a][a / 64] |= std::uint64_t{1} << (a % 64);
      for (std::size_t b : succ[a]) {
        for (std::size_t w = 0; w < words; ++w) reach[a][w] |= reach[b][w];
      }
    }
    for (std::size_t a = 0; a < size && reduction.passed; ++a) {
      ++reduction.cases;
      if (reach[a] != order.up_row(a)) {
        reduction.passed = false;
        reduction.witness = {{"member", to_json(cat[a].poset())},
                             {"problem", "cover closure differs from order"}};
      }
      for (std::size_t b : succ[a]) {
        for (std::size_t c : succ[a]) {
          if (c != b && ((reach[c][b / 64] >> (b % 64)) & 1U)) {
            reduction.passed = false;
            reduction.witness = {{"cover", pair_witness(cat, a, b)},
                                 {"problem", "cover implied by a longer path"}};
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(reduction));

  CheckResult extremes{"bottom_chain_top_antichain"};
  {
    extremes.cases = size;
    std::size_t bottoms = 0, tops = 0, bottom = kNone, top = kNone;
    for (std::size_t a = 0; a < size; ++a) {
      bool is_bottom = true, is_top = true;
      for (std::size_t b = 0; b < size; ++b) {
        is_bottom = is_bottom && order.leq(a, b);
        is_top = is_top && order.leq(b, a);
      }
      if (is_bottom) { ++bottoms; bottom = a; }
      if (is_top) { ++tops; top = a; }
    }
    const Poset chain = Poset::chain(cat.n());
    const Poset antichain = Poset::antichain(cat.n());
    if (bottoms != 1 || tops != 1 || cat[bottom].poset() != chain ||
        cat[top].poset() != antichain) {
      extremes.passed = false;
      extremes.witness = {{"bottoms", bottoms}, {"tops", tops}};
    }
  }
  report.checks.push_back(std::move(extremes));

  if (opts.sample_pairs == 0) {
    check_laws_exhaustive(cat, order, report);
  } else {
    check_laws_sampled(cat, order, opts, report);
  }
  return report;
}

}  // namespace ivorder
