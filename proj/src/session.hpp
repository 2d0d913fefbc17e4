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
#include <string>

#include "io.hpp"

namespace qdl {

struct SessionOptions {
  std::string group;                // builtin name or group file
  std::string cocycle = "trivial";  // trivial | cyclic:n,q | cocycle file
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t solution_cap = std::size_t{1} << 20;
  bool validate_cocycle = true;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  Json to_json() const;
};

/// A group, a cocycle and the engines built from them. The double data is
/// built on first use so that an invalid cocycle can still be reported.
class Session {
 public:
  explicit Session(const SessionOptions& opts);

  const FiniteGroup& group() const { return *group_; }
  const ThreeCocycle& cocycle() const { return omega_; }
  const DoubleDataPtr& data() const;
  const SubcatEngine& engine() const;

  Json group_info() const;
  Json subcats_json() const;
  std::string subcats_text() const;
  Json lattice_json() const;
  std::string lattice_dot() const;
  /// Invariants of the triple described by `request` (see triple_from_json).
  Json invariants(const Json& request) const;
  VerifyReport verify() const;

 private:
  SessionOptions opts_;
  GroupPtr group_;
  ThreeCocycle omega_;
  mutable std::once_flag built_;
  mutable DoubleDataPtr data_;
  mutable std::unique_ptr<SubcatEngine> engine_;
};

}  // namespace qdl
