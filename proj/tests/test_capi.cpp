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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qdl.h"

namespace {

struct Handle {
  qdl_session* s = nullptr;
  ~Handle() { qdl_session_destroy(s); }
};

qdl_options options(const char* group, const char* cocycle = "trivial") {
  return qdl_options{group, cocycle, 0, 0, 0};
}

nlohmann::json take_json(char* p) {
  nlohmann::json j = nlohmann::json::parse(p);
  qdl_string_free(p);
  return j;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(qdl_version()) > 0);
  CHECK(std::string(qdl_status_name(QDL_OK)) == "Ok");
  CHECK(std::string(qdl_status_name(QDL_ERR_NOT_A_GROUP)) == "NotAGroup");
  CHECK(std::string(qdl_status_name(QDL_ERR_INTERNAL)) == "InternalError");
}

TEST_CASE("session lifecycle and queries") {
  Handle h;
  qdl_options o = options("Z2");
  REQUIRE(qdl_session_create(&o, &h.s) == QDL_OK);
  size_t count = 0;
  CHECK(qdl_subcat_count(h.s, &count) == QDL_OK);
  CHECK(count == 5);
  int prime = 0;
  CHECK(qdl_is_prime(h.s, &prime) == QDL_OK);
  CHECK(prime == 1);

  char* out = nullptr;
  REQUIRE(qdl_group_info(h.s, &out) == QDL_OK);
  const auto info = take_json(out);
  CHECK(info["order"] == 2);
  CHECK(info["num_classes"] == 2);

  REQUIRE(qdl_subcats_list(h.s, QDL_FORMAT_JSON, &out) == QDL_OK);
  CHECK(take_json(out)["count"] == 5);

  REQUIRE(qdl_lattice_export(h.s, QDL_FORMAT_DOT, &out) == QDL_OK);
  CHECK(std::string(out).rfind("digraph", 0) == 0);
  qdl_string_free(out);

  CHECK(qdl_lattice_export(h.s, QDL_FORMAT_TEXT, &out) == QDL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(qdl_last_error()).find("InvalidArgument") != std::string::npos);
}

TEST_CASE("twisted session") {
  Handle h;
  qdl_options o = options("Z2", "cyclic:2,1");
  REQUIRE(qdl_session_create(&o, &h.s) == QDL_OK);
  int prime = 1, nd = 0;
  CHECK(qdl_is_prime(h.s, &prime) == QDL_OK);
  CHECK(prime == 0);
  CHECK(qdl_nondegenerate_count(h.s, &nd) == QDL_OK);
  CHECK(nd == 2);
  char* out = nullptr;
  REQUIRE(qdl_invariants(h.s, R"({"K_index": 1, "H_index": 1, "B": [0, 0, 0, 1]})", &out) == QDL_OK);
  const auto inv = take_json(out);
  CHECK(inv["flags"]["nondegenerate"] == true);
  CHECK(inv["tau"]["coeffs"] == nlohmann::json{"1/1", "1/1"});
  CHECK(inv["muger_center"]["dim"] == 1);
  CHECK(qdl_invariants(h.s, R"({"K_index": 1, "H_index": 1, "B": [0, 0, 0, 2]})", &out) ==
        QDL_ERR_NOT_A_SUBCATEGORY);
  CHECK(qdl_invariants(h.s, "{not json", &out) == QDL_ERR_PARSE);
}

TEST_CASE("verify") {
  Handle h;
  qdl_options o = options("S3");
  REQUIRE(qdl_session_create(&o, &h.s) == QDL_OK);
  char* out = nullptr;
  int passed = 0;
  REQUIRE(qdl_verify(h.s, &out, &passed) == QDL_OK);
  const auto rep = take_json(out);
  CHECK(passed == 1);
  CHECK(rep["passed"] == true);
  CHECK(rep["checks"].size() > 10);
}

TEST_CASE("errors") {
  qdl_session* s = nullptr;
  qdl_options bad = options("NoSuchGroup");
  CHECK(qdl_session_create(&bad, &s) != QDL_OK);
  CHECK(s == nullptr);
  CHECK(std::strlen(qdl_last_error()) > 0);
  qdl_options z2 = options("Z2", "cyclic:3,1");
  CHECK(qdl_session_create(&z2, &s) == QDL_ERR_INVALID_ARGUMENT);
  CHECK(qdl_session_create(nullptr, &s) == QDL_ERR_INVALID_ARGUMENT);
  qdl_options cap = options("S4");
  cap.order_cap = 12;
  CHECK(qdl_session_create(&cap, &s) == QDL_ERR_GROUP_TOO_LARGE);
  CHECK(qdl_subcat_count(nullptr, nullptr) == QDL_ERR_INVALID_ARGUMENT);
}
