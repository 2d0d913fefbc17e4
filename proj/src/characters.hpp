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

#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace qdl {

/// Ordinary irreducible characters; values are stored per conjugacy class.
/// Row 0 is the principal character, then rows are ordered by degree and
/// class values.
struct CharacterTable {
  GroupPtr group;
  std::vector<int> degrees;
  std::vector<std::vector<Cyclo>> class_values;  // [character][class]

  int size() const { return static_cast<int>(degrees.size()); }
  const Cyclo& value(int chi, Elem g) const { return class_values[chi][group->class_of(g)]; }
};

/// Class-algebra (Burnside/Dixon) method over F_p, lifted into Q(zeta_N).
/// The exponent of the group must divide N. Orthogonality is verified
/// exactly before returning; a failure raises LiftFailure.
CharacterTable ordinary_table(GroupPtr group, const CycloContext& ctx);

struct OrthogonalityReport {
  bool rows = true;
  bool columns = true;
  bool degrees = true;  // sum of squares equals the order
  bool ok() const { return rows && columns && degrees; }
};
OrthogonalityReport check_orthogonality(const CharacterTable& table);

/// C x Z/m' with (x,i)(y,j) = (xy, i + j + beta'(x,y)) at index x m' + i,
/// where m' is the order of the subgroup of Z/m generated by beta's values
/// and beta' = beta / (m / m').
struct CentralExtension {
  GroupPtr base;
  int modulus = 1;  // m'
  GroupPtr ext;
  Elem central_generator() const { return modulus == 1 ? 0 : 1; }
};
CentralExtension central_extension(GroupPtr base, int m, const std::vector<int>& beta);

/// Irreducible beta-characters of C: rho(x) rho(y) = beta(x,y) rho(xy), with
/// beta(x,y) = zeta_m^{dlog}. Values are traces of the basis element of x
/// under the section x -> (x, 0) of the central extension.
struct ProjCharTable {
  GroupPtr group;
  int modulus = 1;
  std::vector<int> beta;  // flat |C| x |C| exponents mod m
  std::vector<int> degrees;
  std::vector<std::vector<Cyclo>> values;  // [character][element]
  CentralExtension extension;
  CharacterTable extension_table;  // ordinary table of the extension

  int size() const { return static_cast<int>(degrees.size()); }
};

ProjCharTable projective_table(GroupPtr group, int m, std::vector<int> beta, const CycloContext& ctx);

struct ProjectiveReport {
  bool unit_values = true;      // chi(e) = deg
  bool rows = true;             // (1/|C|) sum chi_i conj chi_j = delta
  bool degrees = true;          // sum deg^2 = |C|
  bool extension_columns = true;  // column orthogonality of the extension table
  bool ok() const { return unit_values && rows && degrees && extension_columns; }
};
ProjectiveReport check_projective(const ProjCharTable& table);

/// All lambda: members of `sub` -> Z/N with
/// lambda(h1) + lambda(h2) - lambda(h1 h2) = (N/m) beta(h1,h2).
/// beta is a flat table over the whole of `group`; results are indexed by
/// position in sub.elements().
std::vector<std::vector<int>> degree_one_characters(const FiniteGroup& group, int m, const std::vector<int>& beta,
                                                    const Subgroup& sub, int n, std::size_t cap);

}  // namespace qdl
