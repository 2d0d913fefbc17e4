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

#include <memory>
#include <mutex>
#include <vector>

#include "characters.hpp"
#include "cocycle.hpp"

namespace qdl {

/// Simple object (a, chi) of Rep(D^omega(G)).
struct SimpleObject {
  int cls = 0;         // conjugacy class of a
  Elem rep = 0;        // a, the class representative
  int char_index = 0;  // row in the beta_a-character table of C_G(a)
  int degree = 1;
  long dim = 1;        // |K_a| deg chi
  Cyclo twist;         // chi(a) / deg chi
};

/// Untwisted modular data: S-matrix, twists, Verlinde fusion and duals.
struct ModularData {
  std::vector<std::vector<Cyclo>> s;
  std::vector<Cyclo> t;
  std::vector<int> fusion;  // N_{ij}^k at (i * n + j) * n + k
  std::vector<int> dual;
  int size = 0;

  int n(int i, int j, int k) const { return fusion[(static_cast<std::size_t>(i) * size + j) * size + k]; }
};

/// The simple objects of Rep(D^omega(G)) together with all character data,
/// over the field Q(zeta_N), N = m |G|.
class DoubleData {
 public:
  explicit DoubleData(ThreeCocycle omega);

  const FiniteGroup& group() const { return omega_.group(); }
  const ThreeCocycle& cocycle() const { return omega_; }
  const CycloContext& field() const { return *ctx_; }
  bool twisted() const { return !omega_.is_trivial(); }

  int size() const { return static_cast<int>(simples_.size()); }
  const SimpleObject& simple(int i) const { return simples_[i]; }
  const std::vector<SimpleObject>& simples() const { return simples_; }
  /// First simple with class c; simples of class c are contiguous.
  int class_offset(int c) const { return class_offset_[c]; }
  int index_of(int cls, int char_index) const { return class_offset_[cls] + char_index; }

  const ProjCharTable& table(int cls) const { return tables_[cls]; }
  const EmbeddedGroup& centralizer(int cls) const { return centralizers_[cls]; }

  /// chi_i(g) for g in C_G(a_i), g given as an element of G.
  const Cyclo& chi(int i, Elem g) const;
  /// k with chi_i(g) = deg * zeta_N^k, or -1 when |chi_i(g)| < deg.
  int chi_root(int i, Elem g) const;
  /// beta_a(x,y) as an exponent of zeta_N.
  long beta_n(Elem a, Elem x, Elem y) const { return static_cast<long>(omega_.beta(a, x, y)) * scale_; }
  int scale() const { return scale_; }

  /// Centralization predicate (conditions (i) and (ii) of the twisted
  /// criterion), decided through root-of-unity exponents.
  bool centralize(int i, int j) const;
  /// Same predicate evaluated literally in the field.
  bool centralize_literal(int i, int j) const;

  /// Untwisted only; computed on first use.
  const ModularData& modular_data() const;
  /// |S(X,Y)| = d(X) d(Y), untwisted only.
  bool magnitude_centralize(int i, int j) const;

  /// Sum of theta(X) d(X)^2 over the given simples.
  Cyclo gauss_sum(const std::vector<int>& simples) const;

 private:
  bool classes_commute(int ca, int cb) const;

  ThreeCocycle omega_;
  const CycloContext* ctx_;
  int scale_;
  std::vector<EmbeddedGroup> centralizers_;
  std::vector<ProjCharTable> tables_;
  std::vector<SimpleObject> simples_;
  std::vector<int> class_offset_;
  std::vector<std::vector<int>> roots_;  // [simple][local element]
  std::vector<std::vector<bool>> class_commute_;

  struct ModularCache {
    std::once_flag once;
    std::unique_ptr<ModularData> data;
  };
  std::unique_ptr<ModularCache> modular_ = std::make_unique<ModularCache>();
};

using DoubleDataPtr = std::shared_ptr<const DoubleData>;

}  // namespace qdl
