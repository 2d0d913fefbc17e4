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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdl.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

struct Strings {
  char* p = nullptr;
  ~Strings() { qdl_string_free(p); }
};

int exit_code_for(qdl_status st) {
  switch (st) {
    case QDL_OK:
      return kExitOk;
    case QDL_ERR_IDENTITY_VIOLATION:
    case QDL_ERR_LIFT_FAILURE:
    case QDL_ERR_VERLINDE_NON_INTEGER:
    case QDL_ERR_DIMENSION_MISMATCH:
    case QDL_ERR_INTERNAL:
      return kExitVerify;
    default:
      return kExitInput;
  }
}

int report(qdl_status st) {
  std::cerr << "error: " << qdl_last_error() << "\n";
  return exit_code_for(st);
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

// "K,H,Bfile": normal subgroup indices as listed by `group info`; Bfile is a
// JSON array (or an object with "B"), or "1" for the trivial pairing.
bool triple_request(const std::string& spec, std::string& out, std::string& err) {
  std::stringstream ss(spec);
  std::string k, h, bfile;
  if (!std::getline(ss, k, ',') || !std::getline(ss, h, ',') || !std::getline(ss, bfile)) {
    err = "--triple expects K,H,Bfile";
    return false;
  }
  nlohmann::json req;
  try {
    req["K_index"] = std::stoi(k);
    req["H_index"] = std::stoi(h);
  } catch (const std::exception&) {
    err = "K and H must be normal subgroup indices";
    return false;
  }
  if (bfile != "1" && bfile != "trivial") {
    std::ifstream in(bfile);
    if (!in) {
      err = "cannot open " + bfile;
      return false;
    }
    nlohmann::json b = nlohmann::json::parse(in, nullptr, false);
    if (b.is_discarded()) {
      err = bfile + ": not valid JSON";
      return false;
    }
    req["B"] = b.is_object() && b.contains("B") ? b["B"] : b;
  }
  out = req.dump();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion subcategories of twisted quantum doubles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qdl_version()));

  std::string group_file, builtin, cocycle = "trivial";
  std::size_t cap = 0, solution_cap = 0;
  auto* group_opt = app.add_option("--group", group_file, "group file (JSON)");
  auto* builtin_opt = app.add_option("--builtin", builtin, "builtin group: Z<n>, Z2xZ2, S3, D4, Q8, A4, S4, ...");
  group_opt->excludes(builtin_opt);
  builtin_opt->excludes(group_opt);
  app.add_option("--cocycle", cocycle, "trivial | cyclic:n,q | cocycle file");
  app.add_option("--cap", cap, "largest group order accepted");
  app.add_option("--solution-cap", solution_cap, "largest number of pairings per (K,H)");

  auto* group_cmd = app.add_subcommand("group", "group data");
  group_cmd->require_subcommand(1);
  auto* group_info = group_cmd->add_subcommand("info", "order, classes, normal subgroups, center, central series");

  auto* subcats_cmd = app.add_subcommand("subcats", "fusion subcategories");
  subcats_cmd->require_subcommand(1);
  auto* subcats_list = subcats_cmd->add_subcommand("list", "list every triple (K,H,B)");
  std::string list_format = "text";
  subcats_list->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

  auto* lattice_cmd = app.add_subcommand("lattice", "subcategory lattice");
  lattice_cmd->require_subcommand(1);
  auto* lattice_export = lattice_cmd->add_subcommand("export", "Hasse diagram of the lattice");
  std::string lattice_format = "dot", out_file;
  lattice_export->add_option("--format", lattice_format)->check(CLI::IsMember({"dot", "json"}));
  lattice_export->add_option("--out", out_file, "output file (default stdout)");

  auto* inv_cmd = app.add_subcommand("invariants", "invariants of one triple");
  std::string triple_spec;
  inv_cmd->add_option("--triple", triple_spec, "K,H,Bfile")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->require_subcommand(1);
  auto* verify_all = verify_cmd->add_subcommand("all", "run every check and print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (group_file.empty() && builtin.empty()) {
    std::cerr << "error: one of --group or --builtin is required\n";
    return kExitInput;
  }

  const std::string group_src = builtin.empty() ? group_file : builtin;
  qdl_options opts{group_src.c_str(), cocycle.c_str(), cap, solution_cap, verify_all->parsed() ? 1 : 0};
  qdl_session* raw = nullptr;
  if (const qdl_status st = qdl_session_create(&opts, &raw); st != QDL_OK) return report(st);
  std::unique_ptr<qdl_session, void (*)(qdl_session*)> session(raw, qdl_session_destroy);

  Strings out;
  if (group_info->parsed()) {
    if (const qdl_status st = qdl_group_info(session.get(), &out.p); st != QDL_OK) return report(st);
    write_output(out.p, "");
    return kExitOk;
  }
  if (subcats_list->parsed()) {
    const qdl_format f = list_format == "json" ? QDL_FORMAT_JSON : QDL_FORMAT_TEXT;
    if (const qdl_status st = qdl_subcats_list(session.get(), f, &out.p); st != QDL_OK) return report(st);
    write_output(out.p, "");
    return kExitOk;
  }
  if (lattice_export->parsed()) {
    const qdl_format f = lattice_format == "json" ? QDL_FORMAT_JSON : QDL_FORMAT_DOT;
    if (const qdl_status st = qdl_lattice_export(session.get(), f, &out.p); st != QDL_OK) return report(st);
    if (!write_output(out.p, out_file)) {
      std::cerr << "error: IoError: cannot write " << out_file << "\n";
      return kExitInput;
    }
    return kExitOk;
  }
  if (inv_cmd->parsed()) {
    std::string req, err;
    if (!triple_request(triple_spec, req, err)) {
      std::cerr << "error: " << err << "\n";
      return kExitInput;
    }
    if (const qdl_status st = qdl_invariants(session.get(), req.c_str(), &out.p); st != QDL_OK) return report(st);
    write_output(out.p, "");
    return kExitOk;
  }
  if (verify_all->parsed()) {
    int passed = 0;
    if (const qdl_status st = qdl_verify(session.get(), &out.p, &passed); st != QDL_OK) return report(st);
    write_output(out.p, "");
    return passed ? kExitOk : kExitVerify;
  }
  return kExitInput;
}
