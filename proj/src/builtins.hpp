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

#include <string>
#include <vector>

#include "group.hpp"

namespace qdl {

/// Named groups: Zn (n >= 1), Z2xZ2, Z2xZ4, Z2xZ2xZ2, S3, S4, A4, D4, Q8.
GroupPtr builtin_group(const std::string& name, std::size_t cap = kDefaultOrderCap);

std::vector<std::string> builtin_group_names();

/// G1 x G2 with (g1, g2) at index g1 * |G2| + g2.
GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::string name);

/// Projection of a direct_product onto factor 0 or 1, as an index map.
std::vector<Elem> product_projection(const FiniteGroup& g1, const FiniteGroup& g2, int factor);

}  // namespace qdl
