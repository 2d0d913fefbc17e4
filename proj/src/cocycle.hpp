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

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace qdl {

/// Outcome of one exhaustive identity check.
struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first failing tuple, empty when passed
};

/// Normalized 3-cocycle omega: G^3 -> mu_m stored as exponents mod m,
/// omega(x,y,z) = zeta_m^{dlog(x,y,z)}.
class ThreeCocycle {
 public:
  static ThreeCocycle trivial(GroupPtr g);
  /// Wraps a flat row-major (x,y,z) table without validating it.
  static ThreeCocycle from_table(GroupPtr g, int modulus, std::vector<int> dlog);
  /// omega_q(a,b,c) = q a floor((b+c)/n) on Z/n. The group must be cyclic of
  /// order n; powers of its smallest generator give the additive indices.
  static ThreeCocycle builtin_cyclic(GroupPtr g, int n, int q);
  /// delta mu for a normalized 2-cochain mu (flat n x n table, exponents mod m).
  static ThreeCocycle coboundary(GroupPtr g, int modulus, const std::vector<int>& mu);

  /// omega o (f x f x f) for a homomorphism f: source -> group().
  ThreeCocycle pullback(GroupPtr source, const std::vector<Elem>& hom) const;
  /// Pointwise product; modulus becomes lcm of the two moduli.
  ThreeCocycle product(const ThreeCocycle& other) const;

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int modulus() const { return modulus_; }
  bool is_trivial() const;
  /// Full flat table (n^3 entries, zeros when trivial).
  std::vector<int> table() const;

  int operator()(Elem x, Elem y, Elem z) const {
    if (dlog_.empty()) return 0;
    const std::size_t n = static_cast<std::size_t>(group_->order());
    return dlog_[(static_cast<std::size_t>(x) * n + y) * n + z];
  }

  // Derived 2-cochains, exponents mod m.
  int beta(Elem a, Elem x, Elem y) const;
  int eta(Elem a, Elem x, Elem y) const;
  int gamma(Elem a, Elem x, Elem y) const;
  int nu(Elem a, Elem x, Elem y) const;

  /// Throws NotNormalized or NotACocycle with the first failing tuple.
  void validate() const;
  /// Normalization and cocycle condition as named checks.
  std::vector<IdentityCheck> validation_checks() const;
  /// All derived-cochain identities, each exhaustive.
  std::vector<IdentityCheck> identity_checks() const;
  /// Throws IdentityViolation naming the first failing identity.
  void check_identities() const;

 private:
  ThreeCocycle(GroupPtr g, int modulus, std::vector<int> dlog);
  int mod(long v) const {
    const long r = v % modulus_;
    return static_cast<int>(r < 0 ? r + modulus_ : r);
  }

  GroupPtr group_;
  int modulus_ = 1;
  std::vector<int> dlog_;  // empty when trivial
};

}  // namespace qdl
