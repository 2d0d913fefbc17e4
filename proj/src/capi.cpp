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

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "error.hpp"
#include "qdl.h"
#include "session.hpp"

struct qdl_session {
  std::unique_ptr<qdl::Session> impl;
};

namespace {

thread_local std::string g_last_error;

qdl_status to_status(qdl::ErrorCode code) { return static_cast<qdl_status>(static_cast<int>(code) + 1); }

template <typename F>
qdl_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QDL_OK;
  } catch (const qdl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "InternalError: out of memory";
    return QDL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("InternalError: ") + e.what();
    return QDL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw qdl::Error(qdl::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* qdl_version(void) { return "1.0.0"; }

const char* qdl_status_name(qdl_status status) {
  if (status == QDL_OK) return "Ok";
  if (status < QDL_OK || status > QDL_ERR_INTERNAL) return "Unknown";
  return qdl::to_string(static_cast<qdl::ErrorCode>(static_cast<int>(status) - 1));
}

const char* qdl_last_error(void) { return g_last_error.c_str(); }

qdl_status qdl_session_create(const qdl_options* opts, qdl_session** out) {
  return guarded([&] {
    require(opts && out && opts->group, "options, group and output handle are required");
    *out = nullptr;
    qdl::SessionOptions o;
    o.group = opts->group;
    if (opts->cocycle) o.cocycle = opts->cocycle;
    if (opts->order_cap) o.order_cap = opts->order_cap;
    if (opts->solution_cap) o.solution_cap = opts->solution_cap;
    o.validate_cocycle = opts->skip_cocycle_check == 0;
    auto s = std::make_unique<qdl_session>();
    s->impl = std::make_unique<qdl::Session>(o);
    *out = s.release();
  });
}

void qdl_session_destroy(qdl_session* s) { delete s; }

void qdl_string_free(char* str) { std::free(str); }

qdl_status qdl_group_info(qdl_session* s, char** out_json) {
  return guarded([&] {
    require(s && out_json, "null argument");
    *out_json = dup_string(s->impl->group_info().dump(2));
  });
}

qdl_status qdl_subcats_list(qdl_session* s, qdl_format format, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    require(format == QDL_FORMAT_JSON || format == QDL_FORMAT_TEXT, "subcats list supports json and text");
    *out = dup_string(format == QDL_FORMAT_JSON ? s->impl->subcats_json().dump(2) : s->impl->subcats_text());
  });
}

qdl_status qdl_lattice_export(qdl_session* s, qdl_format format, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    require(format == QDL_FORMAT_JSON || format == QDL_FORMAT_DOT, "lattice export supports json and dot");
    *out = dup_string(format == QDL_FORMAT_JSON ? s->impl->lattice_json().dump(2) : s->impl->lattice_dot());
  });
}

qdl_status qdl_invariants(qdl_session* s, const char* triple_json, char** out_json) {
  return guarded([&] {
    require(s && triple_json && out_json, "null argument");
    qdl::Json request;
    try {
      request = qdl::Json::parse(triple_json);
    } catch (const qdl::Json::parse_error& e) {
      throw qdl::Error(qdl::ErrorCode::Parse, e.what());
    }
    *out_json = dup_string(s->impl->invariants(request).dump(2));
  });
}

qdl_status qdl_verify(qdl_session* s, char** out_json, int* passed) {
  return guarded([&] {
    require(s && out_json && passed, "null argument");
    const qdl::VerifyReport rep = s->impl->verify();
    *passed = rep.passed() ? 1 : 0;
    *out_json = dup_string(rep.to_json().dump(2));
  });
}

qdl_status qdl_subcat_count(qdl_session* s, size_t* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->impl->engine().all_triples().size();
  });
}

qdl_status qdl_is_prime(qdl_session* s, int* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->impl->engine().is_prime() ? 1 : 0;
  });
}

qdl_status qdl_nondegenerate_count(qdl_session* s, int* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->impl->engine().nondegenerate_count();
  });
}

}  // extern "C"
