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

// Command-line front end. Exit status: 0 success, 1 domain error (JSON on
// stderr) or failed verification, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ivorder/enumeration.hpp"
#include "ivorder/error.hpp"
#include "ivorder/interval.hpp"
#include "ivorder/io.hpp"
#include "ivorder/lattice.hpp"
#include "ivorder/sp_tamari.hpp"

namespace {

using namespace ivorder;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Options {
  int n = 0;
  bool sp = false;
  int max_n = kDefaultMaxEnumerationSize;
  std::string out;
  std::string in;
  std::string a;
  std::string b;
  std::string catalog;
  std::string dot;
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 20260101;
  int relabellings = 50;
};

Json read_json(const std::string& path) { return parse_json(read_file(path)); }

IntervalOrder read_interval_order(const std::string& path) {
  return canonical_form(poset_from_json(read_json(path)));
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

Catalog build_catalog(const Options& opt) {
  EnumerateOptions eopts;
  eopts.max_n = opt.max_n;
  Catalog cat = enumerate(opt.n, eopts);
  return opt.sp ? sp_filter(cat) : cat;
}

int run_enumerate(const Options& opt) {
  std::ostringstream ss;
  write_catalog(ss, build_catalog(opt));
  if (opt.out.empty()) {
    std::cout << ss.str();
  } else {
    write_file(opt.out, ss.str());
  }
  return 0;
}

int run_join(const Options& opt) {
  const IntervalOrder a = read_interval_order(opt.a);
  const IntervalOrder b = read_interval_order(opt.b);
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kSizeMismatch, "operands have different sizes");
  }
  std::optional<Catalog> cat;
  if (!opt.catalog.empty()) {
    std::istringstream in(read_file(opt.catalog));
    cat = read_catalog(in);
    if (cat->n() != a.size()) {
      throw Error(ErrorKind::kSizeMismatch,
                  "catalog header n=" + std::to_string(cat->n()) +
                      " but operands have size " + std::to_string(a.size()));
    }
    if (cat->sp_only()) {
      throw Error(ErrorKind::kFormat, "join needs the full catalog, not an sp-only one");
    }
  } else {
    EnumerateOptions eopts;
    eopts.max_n = opt.max_n;
    cat = enumerate(a.size(), eopts);
    std::cerr << Json{{"note", "catalog built in memory"}, {"n", a.size()},
                      {"count", cat->size()}}.dump()
              << '\n';
  }
  print(to_json(join(a, b, *cat).poset()));
  return 0;
}

int run_hasse(const Options& opt) {
  const Catalog cat = build_catalog(opt);
  std::ostringstream ss;
  write_dot(ss, cat, build_lattice(cat));
  write_file(opt.dot, ss.str());
  return 0;
}

void append(VerificationReport& into, VerificationReport from) {
  for (auto& c : from.checks) into.checks.push_back(std::move(c));
  for (auto& note : from.notes) into.notes.push_back(std::move(note));
}

int run_verify(const Options& opt) {
  EnumerateOptions eopts;
  eopts.max_n = opt.max_n;
  const Catalog cat = enumerate(opt.n, eopts);
  VerificationReport report;
  if (opt.suite == "lattice") {
    LatticeVerifyOptions lopts;
    lopts.seed = opt.seed;
    // Exhaustive triples are out of reach beyond a few hundred members.
    lopts.sample_pairs = opt.samples != 0 ? opt.samples : (opt.n >= 7 ? 100000 : 0);
    report = verify_lattice(build_lattice(cat), cat, lopts);
  } else if (opt.suite == "tamari") {
    report = verify_sp_correspondence(opt.n, cat);
    report.suite = "tamari";
    append(report, verify_tamari_restriction(opt.n, cat));
  } else if (opt.suite == "meetsub") {
    report = verify_meet_subsemilattice(opt.n, cat);
  } else {
    std::optional<Catalog> smaller;
    if (opt.n > 1) smaller = enumerate(opt.n - 1, eopts);
    report = verify_labelling(cat, opt.relabellings, opt.seed,
                              smaller ? &*smaller : nullptr);
  }
  print(to_json(report));
  return report.passed() ? 0 : kDomainError;
}

void add_size_options(CLI::App* cmd, Options& opt, bool with_sp) {
  cmd->add_option("--n", opt.n, "Ground-set size")->required()->check(CLI::PositiveNumber);
  if (with_sp) cmd->add_flag("--sp", opt.sp, "Restrict to series-parallel (N-free) members");
  cmd->add_option("--max-n", opt.max_n, "Largest size enumeration will attempt")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice of interval orders: enumeration, meet/join, Hasse diagrams, "
               "and series-parallel/Tamari checks"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Write the catalog of size n");
  add_size_options(enumerate_cmd, opt, true);
  enumerate_cmd->add_option("--out", opt.out, "Catalog file (stdout when omitted)");

  auto* canon_cmd = app.add_subcommand("canon", "Canonical form of a poset");
  canon_cmd->add_option("--in", opt.in, "Poset JSON file")->required();

  auto* meet_cmd = app.add_subcommand("meet", "Meet (relation union) of two interval orders");
  meet_cmd->add_option("--a", opt.a, "First poset JSON file")->required();
  meet_cmd->add_option("--b", opt.b, "Second poset JSON file")->required();
  meet_cmd->add_option("--catalog", opt.catalog, "Ignored; accepted for symmetry with join");

  auto* join_cmd = app.add_subcommand("join", "Join of two interval orders");
  join_cmd->add_option("--a", opt.a, "First poset JSON file")->required();
  join_cmd->add_option("--b", opt.b, "Second poset JSON file")->required();
  join_cmd->add_option("--catalog", opt.catalog, "Catalog file of matching size");
  join_cmd->add_option("--max-n", opt.max_n, "Largest size built in memory")
      ->capture_default_str();

  auto* hasse_cmd = app.add_subcommand("hasse", "Write the Hasse diagram as DOT");
  add_size_options(hasse_cmd, opt, true);
  hasse_cmd->add_option("--dot", opt.dot, "DOT output file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  add_size_options(verify_cmd, opt, false);
  verify_cmd->add_option("--suite", opt.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"lattice", "tamari", "meetsub", "labelling"}));
  verify_cmd->add_option("--samples", opt.samples,
                         "lattice: random pairs instead of all pairs (0 = automatic)");
  verify_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--relabellings", opt.relabellings,
                         "labelling: random relabellings per member")
      ->capture_default_str();

  auto* counts_cmd = app.add_subcommand("counts", "Print the number of members of size n");
  add_size_options(counts_cmd, opt, true);

  auto* represent_cmd = app.add_subcommand("represent", "Integer interval representation");
  represent_cmd->add_option("--in", opt.in, "Poset JSON file")->required();

  auto* intervals_cmd = app.add_subcommand("from-intervals", "Poset from integer intervals");
  intervals_cmd->add_option("--in", opt.in, "Intervals JSON file")->required();

  auto* tree_cmd = app.add_subcommand("tree-to-poset", "Interval order of a planar tree");
  tree_cmd->add_option("--in", opt.in, "Tree JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*enumerate_cmd) return run_enumerate(opt);
    if (*canon_cmd) {
      print(to_json(read_interval_order(opt.in).poset()));
    } else if (*meet_cmd) {
      const IntervalOrder a = read_interval_order(opt.a);
      const IntervalOrder b = read_interval_order(opt.b);
      print(to_json(meet(a, b).poset()));
    } else if (*join_cmd) {
      return run_join(opt);
    } else if (*hasse_cmd) {
      return run_hasse(opt);
    } else if (*verify_cmd) {
      return run_verify(opt);
    } else if (*counts_cmd) {
      std::cout << build_catalog(opt).size() << '\n';
    } else if (*represent_cmd) {
      print(to_json(to_representation(read_interval_order(opt.in))));
    } else if (*intervals_cmd) {
      print(to_json(from_representation(intervals_from_json(read_json(opt.in))).poset()));
    } else if (*tree_cmd) {
      print(to_json(tree_to_poset(tree_from_json(read_json(opt.in))).poset()));
    }
    return 0;
  } catch (const Error& e) {
    Json err = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.witness().empty()) err["witness"] = e.witness();
    std::cerr << err.dump() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    std::cerr << Json{{"error", "InvariantViolation"}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  }
}
