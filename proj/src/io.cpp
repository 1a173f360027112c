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

#include "ivorder/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ivorder/error.hpp"
#include "ivorder/report.hpp"

namespace ivorder {

namespace {

[[noreturn]] void bad_format(const std::string& why) {
  throw Error(ErrorKind::kFormat, why);
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad_format(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad_format(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Poset& p) {
  Json lt = Json::array();
  for (const auto& [x, y] : p.pairs()) lt.push_back({x, y});
  return {{"n", p.size()}, {"lt", std::move(lt)}};
}

Poset poset_from_json(const Json& j) {
  const int n = require_int(require_field(j, "n"), "n");
  const Json& lt = require_field(j, "lt");
  if (!lt.is_array()) bad_format("\"lt\" must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : lt) {
    if (!pr.is_array() || pr.size() != 2) bad_format("each relation must be [x, y]");
    pairs.emplace_back(require_int(pr[0], "element"), require_int(pr[1], "element"));
  }
  return Poset::from_pairs(n, pairs);
}

Json to_json(const IntervalRepresentation& rep) {
  Json iv = Json::array();
  for (const auto& i : rep.intervals) iv.push_back({i.lo, i.hi});
  return {{"intervals", std::move(iv)}};
}

std::vector<Interval> intervals_from_json(const Json& j) {
  const Json& iv = require_field(j, "intervals");
  if (!iv.is_array()) bad_format("\"intervals\" must be an array");
  std::vector<Interval> out;
  for (const auto& pr : iv) {
    if (!pr.is_array() || pr.size() != 2) bad_format("each interval must be [lo, hi]");
    out.push_back({require_int(pr[0], "endpoint"), require_int(pr[1], "endpoint")});
  }
  return out;
}

namespace {

Json subtree_json(const PlanarTree& t, int k) {
  Json node = Json::array();
  for (int c : t.children(k)) node.push_back(subtree_json(t, c));
  return node;
}

void collect_parents(const Json& node, int self, std::vector<int>& parent,
                     int depth) {
  if (!node.is_array()) bad_format("tree nodes must be arrays");
  if (depth > kMaxElements) bad_format("tree too deep");
  for (const auto& child : node) {
    parent.push_back(self);
    const int label = static_cast<int>(parent.size());
    collect_parents(child, label, parent, depth + 1);
  }
}

}  // namespace

Json to_json(const PlanarTree& tree) {
  return {{"tree", subtree_json(tree, 0)}};
}

PlanarTree tree_from_json(const Json& j) {
  std::vector<int> parent;
  collect_parents(require_field(j, "tree"), 0, parent, 0);
  return PlanarTree::from_parents(std::move(parent));
}

void write_catalog(std::ostream& out, const Catalog& cat) {
  const Json header = {{"n", cat.n()}, {"count", cat.size()}, {"sp_only", cat.sp_only()}};
  out << header.dump() << '\n';
  for (const auto& m : cat) out << to_json(m.poset()).dump() << '\n';
}

Catalog read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad_format("empty catalog file");
  const Json header = parse_json(line);
  const int n = require_int(require_field(header, "n"), "n");
  const Json& count_field = require_field(header, "count");
  if (!count_field.is_number_unsigned()) bad_format("\"count\" must be a non-negative integer");
  const auto count = count_field.get<std::size_t>();
  const Json& sp_field = require_field(header, "sp_only");
  if (!sp_field.is_boolean()) bad_format("\"sp_only\" must be a boolean");

  std::vector<IntervalOrder> members;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Poset p = poset_from_json(parse_json(line));
    if (p.size() != n) bad_format("catalog member size differs from header");
    members.push_back(IntervalOrder::from_canonical(p));
  }
  if (members.size() != count) {
    bad_format("catalog header announces " + std::to_string(count) +
               " members but file has " + std::to_string(members.size()));
  }
  Catalog cat(n, std::move(members), sp_field.get<bool>());
  if (cat.size() != count) bad_format("catalog contains duplicate members");
  return cat;
}

void write_dot(std::ostream& out, const Catalog& cat, const LatticeDiagram& diag) {
  out << "digraph AV" << cat.n() << (cat.sp_only() ? "_sp" : "") << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < cat.size(); ++i) {
    out << "  " << i << " [label=\"{";
    bool first = true;
    for (const auto& [x, y] : cat[i].poset().pairs()) {
      if (!first) out << ',';
      out << '(' << x << ',' << y << ')';
      first = false;
    }
    out << "}\"];\n";
  }
  for (const auto& [lo, hi] : diag.covers) {
    out << "  " << lo << " -> " << hi << ";\n";
  }
  out << "}\n";
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_format(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases},
                  {"failures", c.failures}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  Json out = {{"suite", report.suite}, {"n", report.n}, {"passed", report.passed()},
              {"checks", std::move(checks)}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace ivorder
