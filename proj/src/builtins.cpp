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

#include "builtins.hpp"

#include <array>
#include <cctype>

#include "error.hpp"

namespace qdl {

namespace {

GroupPtr from_gens(std::vector<Permutation> gens, const std::string& name, std::size_t cap) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutation_generators(std::move(gens), name, cap));
}

Permutation cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

// Quaternion units +-1, +-i, +-j, +-k at index 2*basis + sign.
int quaternion_mul(int u, int v) {
  static constexpr std::array<std::array<int, 4>, 4> basis{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  const int bu = u / 2, bv = v / 2;
  return 2 * basis[bu][bv] + ((u % 2) ^ (v % 2) ^ sign[bu][bv]);
}

}  // namespace

GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2, std::string name) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::vector<int>> table(n1 * n2, std::vector<int>(n1 * n2));
  for (int a = 0; a < n1 * n2; ++a)
    for (int b = 0; b < n1 * n2; ++b) table[a][b] = g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_mult_table(std::move(table), std::move(name), static_cast<std::size_t>(n1) * n2));
}

std::vector<Elem> product_projection(const FiniteGroup& g1, const FiniteGroup& g2, int factor) {
  const int n2 = g2.order();
  std::vector<Elem> out(static_cast<std::size_t>(g1.order()) * n2);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = factor == 0 ? i / n2 : i % n2;
  return out;
}

GroupPtr builtin_group(const std::string& name, std::size_t cap) {
  if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
    if (digits && name.size() <= 5) {
      const int n = std::stoi(name.substr(1));
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
      if (static_cast<std::size_t>(n) > cap)
        throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
      return from_gens(n == 1 ? std::vector<Permutation>{} : std::vector<Permutation>{cycle(n)}, name, cap);
    }
  }
  if (name == "Z2xZ2") return direct_product(*builtin_group("Z2"), *builtin_group("Z2"), name);
  if (name == "Z2xZ4") return direct_product(*builtin_group("Z2"), *builtin_group("Z4"), name);
  if (name == "Z2xZ2xZ2") return direct_product(*builtin_group("Z2xZ2"), *builtin_group("Z2"), name);
  if (name == "S3") return from_gens({{1, 2, 0}, {1, 0, 2}}, name, cap);
  if (name == "S4") return from_gens({{1, 2, 3, 0}, {1, 0, 2, 3}}, name, cap);
  if (name == "A4") return from_gens({{1, 2, 0, 3}, {1, 0, 3, 2}}, name, cap);
  if (name == "D4") return from_gens({{1, 2, 3, 0}, {3, 2, 1, 0}}, name, cap);
  if (name == "Q8") {
    Permutation i(8), j(8);
    for (int x = 0; x < 8; ++x) {
      i[x] = quaternion_mul(4, x);
      j[x] = quaternion_mul(2, x);
    }
    return from_gens({i, j}, name, cap);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z8", "S4", "A4", "Z2xZ4", "Z2xZ2xZ2"};
}

}  // namespace qdl
