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

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace qdl {

/// Dense element index; the identity is always 0.
using Elem = int;

/// One-line permutation of {0..d-1}: p[i] is the image of i.
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultOrderCap = 512;

/// A subset of a group with bitset membership and O(1) position lookup.
/// Only FiniteGroup constructs these, so membership closure is guaranteed.
class Subgroup {
 public:
  Subgroup() = default;

  std::size_t size() const { return elements_.size(); }
  bool contains(Elem g) const { return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[g]; }
  /// Position of g within elements(), or -1.
  int position(Elem g) const { return position_[g]; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }
  /// Orders by (size, sorted member list).
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  friend class FiniteGroup;
  explicit Subgroup(std::vector<bool> mask, bool normal);

  std::vector<bool> mask_;
  std::vector<Elem> elements_;
  std::vector<int> position_;
  bool normal_ = false;
};

struct CentralSeries {
  std::vector<Subgroup> upper;  // C^0 = {e}, C^1 = Z(G), ... up to stabilization
  std::vector<Subgroup> lower;  // C_0 = G, C_n = [G, C_{n-1}], ... up to stabilization
};

class FiniteGroup;

/// A subgroup re-indexed as a standalone group (identity stays at 0).
struct EmbeddedGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<Elem> to_parent;   // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index or -1
};

/// Finite group given by its multiplication table, with cached conjugacy
/// and normal-subgroup structure. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates the table. An identity not at index 0 is swapped into place.
  static FiniteGroup from_mult_table(std::vector<std::vector<int>> table, std::string name,
                                     std::size_t cap = kDefaultOrderCap);

  /// Breadth-first closure from the identity; generators are applied in
  /// lexicographic order of their one-line form.
  static FiniteGroup from_permutation_generators(std::vector<Permutation> gens, std::string name,
                                                 std::size_t cap = kDefaultOrderCap);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  Elem mul(Elem a, Elem b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// x g x^{-1}
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv_[x]); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  int element_order(Elem g) const { return elem_order_[g]; }
  int exponent() const { return exponent_; }
  std::vector<std::vector<int>> mult_table() const;

  // Conjugacy structure. Representatives are the minimal index in each class.
  int num_classes() const { return static_cast<int>(reps_.size()); }
  const std::vector<Elem>& class_reps() const { return reps_; }
  int class_of(Elem g) const { return class_of_[g]; }
  const std::vector<Elem>& class_members(int c) const { return classes_[c]; }
  std::size_t class_size(int c) const { return classes_[c].size(); }
  /// C_G(a) for the representative of class c.
  const Subgroup& rep_centralizer(int c) const { return rep_centralizers_[c]; }

  Subgroup centralizer(Elem a) const;
  Subgroup centralizer(const Subgroup& k) const;
  Subgroup center() const;
  Subgroup trivial_subgroup() const;
  Subgroup whole() const;

  Subgroup generated(const std::vector<Elem>& gens) const;
  Subgroup normal_closure(const std::vector<Elem>& gens) const;
  /// True iff `members` contains e and is closed under products.
  bool is_subgroup(const std::vector<bool>& members) const;
  /// Wraps a member mask that is already known to be a subgroup.
  Subgroup make_subgroup(const std::vector<bool>& members) const;
  Subgroup intersection(const Subgroup& a, const Subgroup& b) const;
  /// Product set AB; a subgroup whenever one factor is normal.
  Subgroup product(const Subgroup& a, const Subgroup& b) const;
  bool centralize_each_other(const Subgroup& a, const Subgroup& b) const;

  /// All normal subgroups sorted by (size, members); includes {e} and G.
  const std::vector<Subgroup>& normal_subgroups() const;
  /// Index of a normal subgroup in normal_subgroups(), or -1.
  int normal_subgroup_index(const Subgroup& s) const;
  /// Ordered pairs (K, H) of normal subgroups commuting element-wise.
  std::vector<std::pair<int, int>> centralizing_pairs() const;

  /// [G, K] = <g k g^-1 k^-1>.
  Subgroup commutator_subgroup(const Subgroup& k) const;
  CentralSeries central_series() const;
  /// pi^{-1}(Z(G/H)) = {g : [g, x] in H for all x}.
  Subgroup preimage_of_center_of_quotient(const Subgroup& h) const;

  EmbeddedGroup embed(const Subgroup& s) const;

 private:
  FiniteGroup() = default;
  void finalize();

  int order_ = 0;
  std::string name_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  std::vector<Elem> reps_;
  std::vector<int> class_of_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<Subgroup> rep_centralizers_;

  struct NormalCache {
    std::once_flag once;
    std::vector<Subgroup> list;
  };
  std::shared_ptr<NormalCache> normal_cache_ = std::make_shared<NormalCache>();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace qdl
