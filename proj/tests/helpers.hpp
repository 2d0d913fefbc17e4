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

#include "builtins.hpp"
#include "double_data.hpp"
#include "subcat.hpp"

namespace qdl::testing {

inline DoubleDataPtr untwisted(const std::string& name) {
  return std::make_shared<const DoubleData>(ThreeCocycle::trivial(builtin_group(name)));
}

inline DoubleDataPtr cyclic(const std::string& name, int n, int q) {
  return std::make_shared<const DoubleData>(ThreeCocycle::builtin_cyclic(builtin_group(name), n, q));
}

// Index of the simple (class of g, character) with the given twist.
inline int simple_with_twist(const DoubleData& d, Elem g, const Cyclo& theta) {
  const int c = d.group().class_of(g);
  for (int i = d.class_offset(c); i < d.size() && d.simple(i).cls == c; ++i)
    if (d.simple(i).twist == theta) return i;
  return -1;
}

}  // namespace qdl::testing
