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

#ifndef IVORDER_IO_HPP_
#define IVORDER_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivorder/catalog.hpp"
#include "ivorder/interval.hpp"
#include "ivorder/lattice.hpp"
#include "ivorder/poset.hpp"
#include "ivorder/sp_tamari.hpp"

// Text formats. Everything is emitted in a fixed order so equal inputs give
// byte-identical output. Parse failures throw Error(kFormat).
namespace ivorder {

using Json = nlohmann::ordered_json;

// {"n": k, "lt": [[x, y], ...]} with pairs sorted. Readers accept any pair
// order but do not close transitively.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// {"intervals": [[lo, hi], ...]} in element order.
Json to_json(const IntervalRepresentation& rep);
std::vector<Interval> intervals_from_json(const Json& j);

// {"tree": nested} where [] is a leaf and [s1, s2, ...] a node with ordered
// subtrees; the outermost array is the root.
Json to_json(const PlanarTree& tree);
PlanarTree tree_from_json(const Json& j);

// Header {"n": k, "count": m, "sp_only": b}, then one poset per line.
void write_catalog(std::ostream& out, const Catalog& cat);
Catalog read_catalog(std::istream& in);

// One node per member labelled with its strict pairs, one edge per cover
// drawn lower -> upper.
void write_dot(std::ostream& out, const Catalog& cat, const LatticeDiagram& diag);

Json parse_json(const std::string& text);
// Throws Error(kIo) when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace ivorder

#endif  // IVORDER_IO_HPP_
