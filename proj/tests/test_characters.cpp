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
#include "characters.hpp"
#include "doctest.h"

using namespace qdl;

TEST_SUITE("characters") {

TEST_CASE("ordinary tables") {
  const CycloContext& c2 = CycloContext::get(2);
  const CharacterTable z2 = ordinary_table(builtin_group("Z2"), c2);
  CHECK(z2.degrees == std::vector<int>{1, 1});
  CHECK(z2.value(1, 1) == c2.rational(-1));

  const GroupPtr s3 = builtin_group("S3");
  const CycloContext& c6 = CycloContext::get(6);
  const CharacterTable t = ordinary_table(s3, c6);
  CHECK(t.degrees == std::vector<int>{1, 1, 2});
  Elem transposition = -1;
  for (Elem g = 0; g < 6; ++g)
    if (s3->element_order(g) == 2) transposition = g;
  CHECK(t.value(2, transposition).is_zero());
  CHECK(check_orthogonality(t).ok());

  const CharacterTable q8 = ordinary_table(builtin_group("Q8"), CycloContext::get(4));
  CHECK(q8.degrees == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(check_orthogonality(q8).ok());
}

TEST_CASE("orthogonality on every builtin group") {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = builtin_group(name);
    const CharacterTable t = ordinary_table(g, CycloContext::get(g->exponent()));
    INFO(name);
    CHECK(t.size() == g->num_classes());
    CHECK(check_orthogonality(t).ok());
    CHECK(t.degrees[0] == 1);
  }
}

TEST_CASE("column orthogonality by direct summation") {
  const GroupPtr s4 = builtin_group("S4");
  const CharacterTable t = ordinary_table(s4, CycloContext::get(12));
  for (int a = 0; a < s4->num_classes(); ++a)
    for (int b = 0; b < s4->num_classes(); ++b) {
      Cyclo s = CycloContext::get(12).zero();
      for (int i = 0; i < t.size(); ++i) s += t.class_values[i][a] * t.class_values[i][b].conj();
      const long expected = a == b ? static_cast<long>(s4->rep_centralizer(a).size()) : 0;
      CHECK(s == CycloContext::get(12).rational(expected));
    }
}

TEST_CASE("central extensions") {
  const GroupPtr z2 = builtin_group("Z2");
  const CentralExtension triv = central_extension(z2, 2, std::vector<int>(4, 0));
  CHECK(triv.ext->order() == 2);

  const CentralExtension e = central_extension(z2, 2, {0, 0, 0, 1});
  CHECK(e.ext->order() == 4);
  CHECK(e.ext->exponent() == 4);

  const GroupPtr v4 = builtin_group("Z2xZ2");
  std::vector<int> alt(16, 0);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) alt[x * 4 + y] = (x >> 1) * (y & 1);
  const CentralExtension d = central_extension(v4, 2, alt);
  CHECK(d.ext->order() == 8);
  CHECK(d.ext->center().size() == 2);
}

TEST_CASE("projective tables") {
  const GroupPtr z2 = builtin_group("Z2");
  const CycloContext& c4 = CycloContext::get(4);
  const ProjCharTable triv = projective_table(z2, 2, std::vector<int>(4, 0), c4);
  const CharacterTable ord = ordinary_table(z2, c4);
  REQUIRE(triv.size() == ord.size());
  for (int i = 0; i < triv.size(); ++i)
    for (Elem g = 0; g < 2; ++g) CHECK(triv.values[i][g] == ord.value(i, g));

  const ProjCharTable p = projective_table(z2, 2, {0, 0, 0, 1}, c4);
  REQUIRE(p.size() == 2);
  CHECK(p.degrees == std::vector<int>{1, 1});
  std::vector<Cyclo> at1{p.values[0][1], p.values[1][1]};
  CHECK(((at1[0] == c4.root(1) && at1[1] == c4.root(3)) || (at1[0] == c4.root(3) && at1[1] == c4.root(1))));
  CHECK(check_projective(p).ok());
  // rho(1) rho(1) = beta(1,1) rho(e) = -1
  CHECK(p.values[0][1] * p.values[0][1] == c4.rational(-1));

  const GroupPtr v4 = builtin_group("Z2xZ2");
  std::vector<int> alt(16, 0);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) alt[x * 4 + y] = (x >> 1) * (y & 1);
  const ProjCharTable q = projective_table(v4, 2, alt, CycloContext::get(4));
  CHECK(q.degrees == std::vector<int>{2});
  CHECK(check_projective(q).ok());
}

TEST_CASE("degree one characters") {
  const GroupPtr z2 = builtin_group("Z2");
  CHECK(degree_one_characters(*z2, 1, std::vector<int>(4, 0), z2->whole(), 2, 100).size() == 2);
  const auto l = degree_one_characters(*z2, 2, {0, 0, 0, 1}, z2->whole(), 4, 100);
  REQUIRE(l.size() == 2);
  CHECK(l[0][1] == 1);
  CHECK(l[1][1] == 3);
  const GroupPtr z3 = builtin_group("Z3");
  CHECK(degree_one_characters(*z3, 1, std::vector<int>(9, 0), z3->whole(), 3, 100).size() == 3);
}

}  // TEST_SUITE
