// Copyright 2026 The qdl Authors
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

#pragma once

#include <complex>
#include <string>

#include "json.hpp"
#include "subcat.hpp"

namespace qdl {

using Json = nlohmann::json;

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

/// {"order": n, "mult": [[...]]} or {"perm_gens": [[...]]}.
GroupPtr group_from_json(const Json& j, const std::string& name, std::size_t cap);
/// A builtin name, or else a path to a group file.
GroupPtr load_group(const std::string& source, std::size_t cap);
Json group_to_json(const FiniteGroup& g);

/// {"modulus": m, "dlog": [...n^3...], "index": "row-major (x,y,z)"}.
ThreeCocycle cocycle_from_json(GroupPtr g, const Json& j, bool validate = true);
/// "trivial", "cyclic:n,q", or a path to a cocycle file.
ThreeCocycle load_cocycle(GroupPtr g, const std::string& spec, bool validate = true);
Json cocycle_to_json(const ThreeCocycle& omega);

Json cyclo_to_json(const Cyclo& z);
Cyclo cyclo_from_json(const Json& j);
Json complex_to_json(std::complex<double> z);

Json subgroup_to_json(const Subgroup& s);
std::string subgroup_label(const Subgroup& s);
std::string flags_string(const Classification& c);

/// K, H, N, B (row-major over K x H) plus derived data.
Json triple_to_json(const SubcatEngine& engine, const Triple& t);
/// Reads K, H (element lists, or K_index/H_index into the normal subgroups)
/// and B (zero when absent); the result is validated.
Triple triple_from_json(const SubcatEngine& engine, const Json& j);

Json lattice_to_json(const SubcatEngine& engine, const Lattice& l);
Lattice lattice_from_json(const SubcatEngine& engine, const Json& j);
std::string lattice_to_dot(const SubcatEngine& engine, const Lattice& l);

}  // namespace qdl
