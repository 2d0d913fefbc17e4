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
#include <cstdint>
#include <vector>

namespace qdl {

/// Inhomogeneous linear system A x = b over Z/N.
class LinearSystemZn {
 public:
  LinearSystemZn(int modulus, int num_vars);

  int modulus() const { return modulus_; }
  int num_vars() const { return num_vars_; }
  std::size_t num_equations() const { return rows_.size(); }

  /// Adds sum_i coeffs[i].second * x[coeffs[i].first] = rhs (mod N).
  void add_equation(const std::vector<std::pair<int, long>>& coeffs, long rhs);

  /// Number of solutions (0 when inconsistent), saturating at SIZE_MAX.
  std::size_t count_solutions() const;

  /// Every solution, sorted lexicographically. Throws CapExceeded when more
  /// than cap solutions exist.
  std::vector<std::vector<int>> solve_all(std::size_t cap) const;

 private:
  struct Diagonal {
    bool consistent = true;
    std::vector<std::int64_t> d;              // pivots, length rank
    std::vector<std::int64_t> c;              // transformed rhs, length rank
    std::vector<std::vector<std::int64_t>> v;  // column transform, num_vars x num_vars
  };
  Diagonal diagonalize() const;

  int modulus_;
  int num_vars_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::int64_t> rhs_;
};

}  // namespace qdl
