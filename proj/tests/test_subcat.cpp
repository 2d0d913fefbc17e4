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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "helpers.hpp"

using namespace qdl;
using namespace qdl::testing;

namespace {

Triple find_triple(const SubcatEngine& e, std::size_t k, std::size_t h, const std::vector<int>& b) {
  for (const auto& t : e.all_triples())
    if (t.k.size() == k && t.h.size() == h && t.b == b) return t;
  FAIL("triple not found");
  return e.trivial_triple();
}

}  // namespace

TEST_SUITE("subcat") {

TEST_CASE("bicharacter counts") {
  {
    SubcatEngine e(untwisted("Z2"));
    const auto& g = e.group();
    CHECK(e.enumerate_bicharacters(g.trivial_subgroup(), g.whole()).size() == 1);
    CHECK(e.enumerate_bicharacters(g.whole(), g.trivial_subgroup()).size() == 1);
    const auto bs = e.enumerate_bicharacters(g.whole(), g.whole());
    REQUIRE(bs.size() == 2);
    CHECK(bs[1].value(1, 1) == 1);  // -1 over zeta_2
  }
  {
    SubcatEngine e(cyclic("Z2", 2, 1));
    const auto& g = e.group();
    const auto bs = e.enumerate_bicharacters(g.whole(), g.whole());
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].value(1, 1) == 1);  // i over zeta_4
    CHECK(bs[1].value(1, 1) == 3);
  }
  {
    SubcatEngine e(untwisted("S3"));
    const Subgroup& a3 = e.group().normal_subgroups()[1];
    CHECK(e.enumerate_bicharacters(a3, a3).size() == 3);
  }
}

TEST_CASE("triple counts") {
  CHECK(SubcatEngine(untwisted("Z2")).all_triples().size() == 5);
  CHECK(SubcatEngine(cyclic("Z2", 2, 1)).all_triples().size() == 5);
  CHECK(SubcatEngine(untwisted("Z3")).all_triples().size() == 6);
  CHECK(SubcatEngine(untwisted("S3")).all_triples().size() == 8);
}

TEST_CASE("build and recover") {
  const DoubleDataPtr d = untwisted("Z2");
  SubcatEngine e(d);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(e.build_subcat(e.whole_triple()) == all);
  CHECK(e.build_subcat(e.trivial_triple()) == std::vector<int>{0});
  CHECK(e.triple_of(all) == e.whole_triple());
  CHECK(e.triple_of({0}) == e.trivial_triple());

  const CycloContext& f = d->field();
  const int m = simple_with_twist(*d, 1, f.one());
  const int fermion = simple_with_twist(*d, 1, f.rational(-1));
  std::vector<int> flux{0, m};
  CHECK(e.build_subcat(find_triple(e, 2, 2, {0, 0, 0, 0})) == flux);
  const Triple tf = e.triple_of({0, fermion});
  CHECK(tf.k.size() == 2);
  CHECK(tf.h.size() == 2);
  CHECK(tf.value(1, 1) == 1);
  CHECK_THROWS_AS(e.triple_of({0, 1, 2}), Error);
  CHECK_THROWS_AS(e.triple_of({1}), Error);
}

TEST_CASE("centralizer and Muger center") {
  SubcatEngine e(untwisted("Z2"));
  CHECK(e.muger_center(e.whole_triple()) == e.trivial_triple());
  const Triple boson = find_triple(e, 2, 2, {0, 0, 0, 0});
  CHECK(e.centralizer(boson) == boson);
  CHECK(e.muger_center(boson) == boson);

  SubcatEngine tw(cyclic("Z2", 2, 1));
  const Triple semion = find_triple(tw, 2, 2, {0, 0, 0, 1});
  CHECK(tw.muger_center(semion) == tw.trivial_triple());
  CHECK(tw.classify(semion).nondegenerate);
  CHECK(!tw.classify(semion).symmetric);
}

TEST_CASE("classification") {
  SubcatEngine e(untwisted("Z2"));
  const Classification c = e.classify(e.trivial_triple());
  CHECK(c.symmetric);
  CHECK(c.isotropic);
  CHECK(!c.lagrangian);
  CHECK(c.nondegenerate);
  const Classification w = e.classify(e.whole_triple());
  CHECK(w.nondegenerate);
  CHECK(!w.symmetric);
  CHECK(e.classify(find_triple(e, 2, 2, {0, 0, 0, 0})).lagrangian);
  const Classification fermion = e.classify(find_triple(e, 2, 2, {0, 0, 0, 1}));
  CHECK(fermion.symmetric);
  CHECK(!fermion.isotropic);
}

TEST_CASE("primality and nondegenerate counts") {
  CHECK(SubcatEngine(untwisted("Z2")).is_prime());
  CHECK(SubcatEngine(untwisted("Z2")).nondegenerate_count() == 0);
  CHECK(SubcatEngine(untwisted("Z3")).nondegenerate_count() == 2);
  CHECK(SubcatEngine(untwisted("Z5")).nondegenerate_count() == 4);
  CHECK(SubcatEngine(untwisted("Z4")).is_prime());
  CHECK(SubcatEngine(untwisted("S3")).is_prime());
  CHECK(!SubcatEngine(cyclic("Z2", 2, 1)).is_prime());
  CHECK(SubcatEngine(cyclic("Z2", 2, 1)).nondegenerate_count() == 2);
}

TEST_CASE("gauss sums") {
  SubcatEngine e(untwisted("Z2"));
  const CycloContext& f = e.data().field();
  CHECK(e.gauss_sum(e.whole_triple()) == f.rational(2));
  CHECK(std::abs(e.central_charge(e.whole_triple()) - std::complex<double>(1, 0)) < 1e-12);
  const Triple fermion = find_triple(e, 2, 2, {0, 0, 0, 1});
  CHECK(e.gauss_sum(fermion).is_zero());
  CHECK(e.gauss_sum_direct(fermion).is_zero());

  SubcatEngine tw(cyclic("Z2", 2, 1));
  const CycloContext& g = tw.data().field();
  const Triple semion = find_triple(tw, 2, 2, {0, 0, 0, 1});
  CHECK(tw.gauss_sum(semion) == g.one() + g.root(1));
  CHECK(tw.gauss_sum_nondegenerate(semion) == g.one() + g.root(1));
  const auto z = tw.central_charge(semion);
  CHECK(std::abs(z - std::polar(1.0, M_PI / 4)) < 1e-9);
}

TEST_CASE("lattice operations") {
  SubcatEngine e(untwisted("Z2"));
  const Triple boson = find_triple(e, 2, 2, {0, 0, 0, 0});
  const Triple fermion = find_triple(e, 2, 2, {0, 0, 0, 1});
  CHECK(e.contains(e.trivial_triple(), boson));
  CHECK(e.contains(boson, e.whole_triple()));
  CHECK(!e.contains(boson, fermion));
  CHECK(e.meet(boson, fermion) == e.trivial_triple());
  CHECK(e.join(boson, fermion) == e.whole_triple());
  const Lattice l = e.lattice();
  CHECK(l.nodes.size() == 5);
  CHECK(l.edges.size() == 6);
}

TEST_CASE("adjoint and central series") {
  SubcatEngine d4(untwisted("D4"));
  const Subgroup z = d4.group().center();
  const Triple adj = d4.adjoint(d4.whole_triple());
  CHECK(adj.k == z);
  CHECK(adj.h == z);

  SubcatEngine s3(untwisted("S3"));
  const Triple u1 = s3.upper_central_term(1);
  CHECK(u1.k.size() == 3);
  CHECK(u1.h.is_trivial());

  SubcatEngine z4(untwisted("Z4"));
  CHECK(z4.upper_central_term(1) == z4.trivial_triple());

  SubcatEngine tw(cyclic("Z2", 2, 1));
  CHECK_THROWS_AS(tw.adjoint(tw.whole_triple()), Error);
  SubcatEngine z2(untwisted("Z2"));
  CHECK_THROWS_AS(z2.adjoint(find_triple(z2, 2, 2, {0, 0, 0, 1})), Error);
}

TEST_CASE("counting identity") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    SubcatEngine e(untwisted(name));
    e.all_triples();
    CHECK(e.counting_stats().checked > 0);
    CHECK(e.counting_stats().failed == 0);
  }
  SubcatEngine e(cyclic("Z4", 4, 1));
  e.all_triples();
  CHECK(e.counting_stats().failed == 0);
}

TEST_CASE("laws on every triple") {
  std::vector<DoubleDataPtr> cases{untwisted("Z4"), untwisted("S3"), untwisted("D4"), cyclic("Z2", 2, 1),
                                   cyclic("Z4", 4, 1), cyclic("Z4", 4, 2), cyclic("Z3", 3, 1)};
  for (const auto& d : cases) {
    SubcatEngine e(d);
    const long order = e.group().order();
    for (const auto& t : e.all_triples()) {
      CHECK(e.is_valid(t));
      const auto s = e.build_subcat(t);
      CHECK(e.triple_of(s) == t);
      CHECK(e.centralizer(e.centralizer(t)) == t);
      CHECK(e.dim(t) * e.dim(e.centralizer(t)) == order * order);
      CHECK(e.gauss_sum(t) == e.gauss_sum_direct(t));
      if (e.classify(t).lagrangian) CHECK(e.dim(t) == order);
      if (e.classify(t).nondegenerate) CHECK(e.gauss_sum_nondegenerate(t) == e.gauss_sum(t));
    }
  }
}

TEST_CASE("coboundary twists keep the count") {
  const GroupPtr g = builtin_group("Z4");
  const std::size_t base = SubcatEngine(untwisted("Z4")).all_triples().size();
  std::vector<int> mu(16, 0);
  mu[1 * 4 + 1] = 1;
  mu[2 * 4 + 3] = 3;
  mu[3 * 4 + 3] = 2;
  auto d = std::make_shared<const DoubleData>(ThreeCocycle::coboundary(g, 4, mu));
  CHECK(SubcatEngine(d).all_triples().size() == base);
}

}  // TEST_SUITE
