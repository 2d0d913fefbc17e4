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

#include <random>

#include "builtins.hpp"
#include "cocycle.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace qdl;

namespace {

std::vector<int> random_cochain(const FiniteGroup& g, int m, std::mt19937& rng) {
  const int n = g.order();
  std::vector<int> mu(static_cast<std::size_t>(n) * n, 0);
  std::uniform_int_distribution<int> dist(0, m - 1);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) mu[static_cast<std::size_t>(x) * n + y] = dist(rng);
  return mu;
}

bool all_pass(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("trivial cocycle") {
  const GroupPtr s3 = builtin_group("S3");
  const ThreeCocycle w = ThreeCocycle::trivial(s3);
  CHECK(w.is_trivial());
  CHECK_NOTHROW(w.validate());
  CHECK(all_pass(w.identity_checks()));
  for (Elem a = 0; a < 6; ++a)
    for (Elem x = 0; x < 6; ++x)
      for (Elem y = 0; y < 6; ++y) {
        CHECK(w.beta(a, x, y) == 0);
        CHECK(w.eta(a, x, y) == 0);
        CHECK(w.gamma(a, x, y) == 0);
        CHECK(w.nu(a, x, y) == 0);
      }
}

TEST_CASE("builtin cyclic family") {
  const GroupPtr z2 = builtin_group("Z2");
  CHECK(ThreeCocycle::builtin_cyclic(z2, 2, 0).is_trivial());
  const ThreeCocycle w = ThreeCocycle::builtin_cyclic(z2, 2, 1);
  CHECK(w.modulus() == 2);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) CHECK(w(x, y, z) == (x == 1 && y == 1 && z == 1 ? 1 : 0));
  CHECK(w.beta(1, 1, 1) == 1);
  CHECK_NOTHROW(w.validate());
  CHECK_NOTHROW(ThreeCocycle::builtin_cyclic(builtin_group("Z3"), 3, 1).validate());
  CHECK(all_pass(ThreeCocycle::builtin_cyclic(builtin_group("Z4"), 4, 1).identity_checks()));
}

TEST_CASE("every builtin cyclic cocycle with n <= 8 passes the identity suite") {
  for (int n = 2; n <= 8; ++n) {
    const GroupPtr g = builtin_group("Z" + std::to_string(n));
    for (int q = 0; q < n; ++q) {
      const ThreeCocycle w = ThreeCocycle::builtin_cyclic(g, n, q);
      CHECK_NOTHROW(w.validate());
      for (const auto& c : w.identity_checks()) {
        INFO("n=" << n << " q=" << q << " " << c.name << " " << c.witness);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("coboundaries") {
  std::mt19937 rng(7);
  const GroupPtr s3 = builtin_group("S3");
  CHECK(ThreeCocycle::coboundary(s3, 3, std::vector<int>(36, 0)).is_trivial());
  for (int trial = 0; trial < 5; ++trial) {
    const ThreeCocycle w = ThreeCocycle::coboundary(s3, 6, random_cochain(*s3, 6, rng));
    CHECK_NOTHROW(w.validate());
    CHECK(all_pass(w.identity_checks()));
  }
  const GroupPtr z4 = builtin_group("Z4");
  const ThreeCocycle w = ThreeCocycle::builtin_cyclic(z4, 4, 1).product(
      ThreeCocycle::coboundary(z4, 4, random_cochain(*z4, 4, rng)));
  CHECK_NOTHROW(w.validate());
  CHECK(all_pass(w.identity_checks()));
  std::vector<int> bad(16, 0);
  bad[1] = 1;  // mu(e, 1) != 0
  CHECK_THROWS_AS(ThreeCocycle::coboundary(z4, 4, bad), Error);
}

TEST_CASE("pullback along a projection") {
  const GroupPtr z2 = builtin_group("Z2");
  const GroupPtr z4 = builtin_group("Z4");
  const GroupPtr prod = direct_product(*z2, *z4, "Z2xZ4");
  const ThreeCocycle w = ThreeCocycle::builtin_cyclic(z4, 4, 1).pullback(prod, product_projection(*z2, *z4, 1));
  CHECK_NOTHROW(w.validate());
  CHECK(all_pass(w.identity_checks()));
  CHECK_THROWS_AS(ThreeCocycle::builtin_cyclic(z4, 4, 1).pullback(prod, std::vector<Elem>(8, 1)), Error);
}

TEST_CASE("corrupted table") {
  const GroupPtr z2 = builtin_group("Z2");
  std::vector<int> table = ThreeCocycle::builtin_cyclic(z2, 2, 1).table();
  table[1 * 4 + 1 * 2 + 0] = 1;  // omega(1,1,0)
  const ThreeCocycle w = ThreeCocycle::from_table(z2, 2, table);
  CHECK_THROWS_AS(w.validate(), Error);
  CHECK(!all_pass(w.validation_checks()));
  try {
    w.check_identities();
    FAIL("expected an identity violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityViolation);
  }

  std::vector<int> cyc = ThreeCocycle::builtin_cyclic(builtin_group("Z3"), 3, 1).table();
  cyc[1 * 9 + 2 * 3 + 2] = (cyc[1 * 9 + 2 * 3 + 2] + 1) % 3;
  const ThreeCocycle w3 = ThreeCocycle::from_table(builtin_group("Z3"), 3, cyc);
  CHECK(!all_pass(w3.validation_checks()));
}

TEST_CASE("identity checks are named") {
  const auto checks = ThreeCocycle::trivial(builtin_group("Z2")).identity_checks();
  std::vector<std::string> names;
  for (const auto& c : checks) names.push_back(c.name);
  for (const char* n : {"beta-relation", "centralizer-agreement", "gamma-beta-relation", "nu-eta-relation",
                        "nu-beta-i", "nu-beta-ii", "nu-beta-iii"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

}  // TEST_SUITE
