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
#include <string>
#include <vector>

#include "subcat.hpp"

namespace qdl {

using SimpleSet = std::vector<int>;

struct ClosureReport {
  std::vector<SimpleSet> closed_sets;  // untwisted only
  bool match = true;
  std::vector<SimpleSet> only_in_oracle;
  std::vector<SimpleSet> only_in_triples;
  std::vector<std::string> mismatches;
};

/// Fusion-closure computations from Verlinde data (omega = 1).
class FusionOracle {
 public:
  explicit FusionOracle(DoubleDataPtr data);

  SimpleSet fusion_closure(const SimpleSet& seed) const;
  /// Closures of single simples, then closures of pairwise unions to a fixpoint.
  std::vector<SimpleSet> all_subcategories(std::size_t cap = 4096) const;
  /// Closure of all subobjects of X (x) X* for X in d.
  SimpleSet adjoint(const SimpleSet& d) const;
  /// {X : X (x) X* lies in d}.
  SimpleSet commutator(const SimpleSet& d) const;
  /// Adjoint iterated from the whole category, until it stabilizes.
  std::vector<SimpleSet> upper_series() const;
  /// Commutator iterated from the unit, until it stabilizes.
  std::vector<SimpleSet> lower_series() const;

 private:
  DoubleDataPtr data_;
  const ModularData* md_;
};

/// {X : X centralizes every Y in d}, by the centralization predicate.
SimpleSet centralizer_by_predicate(const DoubleData& data, const SimpleSet& d);

ClosureReport certify(const SubcatEngine& engine, std::size_t cap = 4096);

}  // namespace qdl
