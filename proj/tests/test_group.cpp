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
#include "doctest.h"
#include "error.hpp"
#include "group.hpp"

using namespace qdl;

TEST_SUITE("group") {

TEST_CASE("mult table construction") {
  const FiniteGroup triv = FiniteGroup::from_mult_table({{0}}, "1");
  CHECK(triv.order() == 1);
  CHECK(triv.num_classes() == 1);

  const FiniteGroup z2 = FiniteGroup::from_mult_table({{0, 1}, {1, 0}}, "Z2");
  CHECK(z2.order() == 2);
  CHECK(z2.num_classes() == 2);
  CHECK(z2.element_order(1) == 2);
}

TEST_CASE("identity is moved to index 0") {
  const FiniteGroup z2 = FiniteGroup::from_mult_table({{1, 0}, {0, 1}}, "Z2");
  CHECK(z2.mul(0, 1) == 1);
  CHECK(z2.mul(1, 1) == 0);
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1}, {1, 1}}, "bad"), Error);
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1}, {1}}, "bad"), Error);
  // not associative: a Latin square with identity that is not a group
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 4, 0, 1, 3},
                                                {3, 2, 4, 0, 1},
                                                {4, 3, 1, 2, 0}},
                                               "loop"),
                  Error);
  try {
    FiniteGroup::from_mult_table({{0, 1}, {1, 1}}, "bad");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAGroup);
  }
}

TEST_CASE("permutation generators") {
  CHECK(FiniteGroup::from_permutation_generators({}, "1").order() == 1);
  const FiniteGroup z3 = FiniteGroup::from_permutation_generators({{1, 2, 0}}, "Z3");
  CHECK(z3.order() == 3);
  CHECK(z3.num_classes() == 3);
  const FiniteGroup s3 = FiniteGroup::from_permutation_generators({{1, 2, 0}, {1, 0, 2}}, "S3");
  CHECK(s3.order() == 6);
  CHECK(s3.num_classes() == 3);
  std::vector<std::size_t> sizes;
  for (int c = 0; c < 3; ++c) sizes.push_back(s3.class_size(c));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(builtin_group("S4", 10), Error);
  CHECK(builtin_group("S4", 24)->order() == 24);
}

TEST_CASE("class sizes match brute-force conjugation") {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = builtin_group(name);
    for (Elem a = 0; a < g->order(); ++a) {
      std::vector<bool> seen(g->order(), false);
      for (Elem x = 0; x < g->order(); ++x) seen[g->conj(x, a)] = true;
      const auto orbit = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
      CHECK(orbit == g->class_size(g->class_of(a)));
      CHECK(g->class_reps()[g->class_of(a)] <= a);
    }
  }
}

TEST_CASE("normal subgroups") {
  CHECK(builtin_group("Z2")->normal_subgroups().size() == 2);
  CHECK(builtin_group("S3")->normal_subgroups().size() == 3);
  CHECK(builtin_group("Z2xZ2")->normal_subgroups().size() == 5);
  CHECK(builtin_group("D4")->normal_subgroups().size() == 6);
  CHECK(builtin_group("Q8")->normal_subgroups().size() == 6);
  CHECK(builtin_group("S4")->normal_subgroups().size() == 4);
  const GroupPtr s3 = builtin_group("S3");
  CHECK(s3->normal_subgroups()[1].size() == 3);
}

TEST_CASE("centralizing pairs against brute force") {
  CHECK(builtin_group("Z2")->centralizing_pairs().size() == 4);
  CHECK(builtin_group("S3")->centralizing_pairs().size() == 6);
  for (const char* name : {"D4", "Q8", "S4", "A4"}) {
    const GroupPtr g = builtin_group(name);
    const auto& ns = g->normal_subgroups();
    std::size_t count = 0;
    for (const auto& k : ns)
      for (const auto& h : ns) {
        bool ok = true;
        for (Elem x : k.elements())
          for (Elem y : h.elements()) ok = ok && g->commute(x, y);
        count += ok;
      }
    CHECK(g->centralizing_pairs().size() == count);
  }
}

TEST_CASE("commutator subgroups") {
  const GroupPtr z4 = builtin_group("Z4");
  CHECK(z4->commutator_subgroup(z4->whole()).is_trivial());
  const GroupPtr s3 = builtin_group("S3");
  CHECK(s3->commutator_subgroup(s3->whole()).size() == 3);
  const GroupPtr d4 = builtin_group("D4");
  CHECK(d4->commutator_subgroup(d4->center()).is_trivial());
  CHECK(d4->commutator_subgroup(d4->whole()) == d4->center());
}

TEST_CASE("central series") {
  const GroupPtr z4 = builtin_group("Z4");
  const CentralSeries a = z4->central_series();
  CHECK(a.upper.back() == z4->whole());
  CHECK(a.lower.back().is_trivial());

  const GroupPtr s3 = builtin_group("S3");
  const CentralSeries s = s3->central_series();
  CHECK(s.upper.back().is_trivial());
  CHECK(s.lower.back().size() == 3);

  const GroupPtr d4 = builtin_group("D4");
  const CentralSeries d = d4->central_series();
  REQUIRE(d.upper.size() == 3);
  CHECK(d.upper[1] == d4->center());
  CHECK(d.upper[2] == d4->whole());
  REQUIRE(d.lower.size() == 3);
  CHECK(d.lower[1] == d4->center());
  CHECK(d.lower[2].is_trivial());
}

TEST_CASE("preimage of the center of a quotient") {
  const GroupPtr s3 = builtin_group("S3");
  CHECK(s3->preimage_of_center_of_quotient(s3->whole()) == s3->whole());
  CHECK(s3->preimage_of_center_of_quotient(s3->trivial_subgroup()).is_trivial());
  const GroupPtr d4 = builtin_group("D4");
  CHECK(d4->preimage_of_center_of_quotient(d4->center()) == d4->whole());
}

TEST_CASE("direct products") {
  const GroupPtr g = builtin_group("Z2xZ4");
  CHECK(g->order() == 8);
  CHECK(g->exponent() == 4);
  CHECK(g->num_classes() == 8);
}

}  // TEST_SUITE
