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

#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "builtins.hpp"
#include "error.hpp"

namespace qdl {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad field \"") + key + "\": " + e.what());
  }
}

Subgroup subgroup_from_json(const FiniteGroup& g, const Json& j, const char* key) {
  const std::string index_key = std::string(key) + "_index";
  if (j.is_object() && !j.contains(key) && j.contains(index_key)) {
    const int idx = get_field<int>(j, index_key.c_str());
    const auto& normals = g.normal_subgroups();
    if (idx < 0 || idx >= static_cast<int>(normals.size()))
      throw Error(ErrorCode::InvalidArgument, index_key + " out of range");
    return normals[idx];
  }
  const auto elems = get_field<std::vector<int>>(j, key);
  std::vector<bool> mask(g.order(), false);
  for (int x : elems) {
    if (x < 0 || x >= g.order()) throw Error(ErrorCode::Parse, std::string(key) + " has an element out of range");
    mask[x] = true;
  }
  if (!g.is_subgroup(mask)) throw Error(ErrorCode::NotASubcategory, std::string(key) + " is not a subgroup");
  return g.make_subgroup(mask);
}

std::string rational_string(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

GroupPtr group_from_json(const Json& j, const std::string& name, std::size_t cap) {
  if (j.is_object() && j.contains("perm_gens")) {
    auto gens = get_field<std::vector<Permutation>>(j, "perm_gens");
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutation_generators(std::move(gens), name, cap));
  }
  const auto order = get_field<long>(j, "order");
  auto mult = get_field<std::vector<std::vector<int>>>(j, "mult");
  if (order != static_cast<long>(mult.size())) throw Error(ErrorCode::NotAGroup, "order does not match table size");
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_mult_table(std::move(mult), name, cap));
}

GroupPtr load_group(const std::string& source, std::size_t cap) {
  for (const auto& n : builtin_group_names())
    if (n == source) return builtin_group(source, cap);
  if (source.size() > 1 && source[0] == 'Z' && source.find_first_not_of("0123456789", 1) == std::string::npos)
    return builtin_group(source, cap);
  return group_from_json(read_json_file(source), source, cap);
}

Json group_to_json(const FiniteGroup& g) { return Json{{"order", g.order()}, {"mult", g.mult_table()}}; }

ThreeCocycle cocycle_from_json(GroupPtr g, const Json& j, bool validate) {
  const int m = get_field<int>(j, "modulus");
  auto dlog = get_field<std::vector<int>>(j, "dlog");
  if (j.contains("index") && j["index"] != "row-major (x,y,z)")
    throw Error(ErrorCode::Parse, "unsupported cocycle index order");
  ThreeCocycle omega = ThreeCocycle::from_table(std::move(g), m, std::move(dlog));
  if (validate) omega.validate();
  return omega;
}

ThreeCocycle load_cocycle(GroupPtr g, const std::string& spec, bool validate) {
  if (spec == "trivial") return ThreeCocycle::trivial(std::move(g));
  if (spec.rfind("cyclic:", 0) == 0) {
    int n = 0, q = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str() + 7, "%d,%d%c", &n, &q, &tail) != 2)
      throw Error(ErrorCode::Parse, "expected cyclic:n,q but got " + spec);
    return ThreeCocycle::builtin_cyclic(std::move(g), n, q);
  }
  return cocycle_from_json(std::move(g), read_json_file(spec), validate);
}

Json cocycle_to_json(const ThreeCocycle& omega) {
  return Json{{"modulus", omega.modulus()}, {"dlog", omega.table()}, {"index", "row-major (x,y,z)"}};
}

Json cyclo_to_json(const Cyclo& z) {
  Json coeffs = Json::array();
  for (int i = 0; i < z.context().degree(); ++i) coeffs.push_back(rational_string(z.coeff(i)));
  return Json{{"N", z.context().order()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const Json& j) {
  const int n = get_field<int>(j, "N");
  if (n < 1) throw Error(ErrorCode::Parse, "cyclotomic order must be positive");
  const CycloContext& ctx = CycloContext::get(n);
  const auto coeffs = get_field<std::vector<std::string>>(j, "coeffs");
  if (static_cast<int>(coeffs.size()) > ctx.degree()) throw Error(ErrorCode::Parse, "too many coefficients");
  Cyclo out = ctx.zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class q;
    if (q.set_str(coeffs[i], 10) != 0) throw Error(ErrorCode::Parse, "bad rational " + coeffs[i]);
    q.canonicalize();
    out += ctx.root(static_cast<long>(i)) * q;
  }
  return out;
}

Json complex_to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json subgroup_to_json(const Subgroup& s) { return s.elements(); }

std::string subgroup_label(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "}";
}

std::string flags_string(const Classification& c) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(c.symmetric, "sym");
  add(c.isotropic, "iso");
  add(c.lagrangian, "lagr");
  add(c.nondegenerate, "nondeg");
  return out.empty() ? "-" : out;
}

Json triple_to_json(const SubcatEngine& engine, const Triple& t) {
  const FiniteGroup& g = engine.group();
  const Classification c = engine.classify(t);
  const Cyclo tau = engine.gauss_sum(t);
  Json j;
  j["K"] = subgroup_to_json(t.k);
  j["H"] = subgroup_to_json(t.h);
  j["K_index"] = g.normal_subgroup_index(t.k);
  j["H_index"] = g.normal_subgroup_index(t.h);
  j["N"] = t.n;
  j["B"] = t.b;
  j["dim"] = engine.dim(t);
  j["flags"] = {{"symmetric", c.symmetric},
                {"isotropic", c.isotropic},
                {"lagrangian", c.lagrangian},
                {"nondegenerate", c.nondegenerate}};
  j["simples"] = engine.build_subcat(t);
  j["tau"] = cyclo_to_json(tau);
  j["zeta"] = complex_to_json(engine.central_charge(t));
  return j;
}

Triple triple_from_json(const SubcatEngine& engine, const Json& j) {
  const FiniteGroup& g = engine.group();
  Triple t{subgroup_from_json(g, j, "K"), subgroup_from_json(g, j, "H"), engine.field_order(), {}};
  if (j.contains("N") && get_field<int>(j, "N") != engine.field_order())
    throw Error(ErrorCode::Parse, "pairing exponents are over a different root of unity");
  if (j.contains("B")) t.b = get_field<std::vector<int>>(j, "B");
  else t.b.assign(t.k.size() * t.h.size(), 0);
  if (t.b.size() != t.k.size() * t.h.size()) throw Error(ErrorCode::Parse, "B must have |K| * |H| entries");
  for (const int v : t.b) {
    if (v < 0 || v >= t.n) throw Error(ErrorCode::Parse, "B entries must lie in [0, N)");
  }
  if (!engine.is_valid(t)) throw Error(ErrorCode::NotASubcategory, "not a valid triple");
  return t;
}

Json lattice_to_json(const SubcatEngine& engine, const Lattice& l) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    Json n = triple_to_json(engine, l.nodes[i]);
    n["id"] = i;
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : l.edges) edges.push_back({a, b});
  return Json{{"group", engine.group().name()}, {"nodes", nodes}, {"edges", edges}};
}

Lattice lattice_from_json(const SubcatEngine& engine, const Json& j) {
  Lattice l;
  const auto nodes = get_field<std::vector<Json>>(j, "nodes");
  for (const auto& n : nodes) l.nodes.push_back(triple_from_json(engine, n));
  for (const auto& e : get_field<std::vector<std::pair<int, int>>>(j, "edges")) {
    const int count = static_cast<int>(l.nodes.size());
    if (e.first < 0 || e.first >= count || e.second < 0 || e.second >= count)
      throw Error(ErrorCode::Parse, "edge endpoint out of range");
    l.edges.push_back(e);
  }
  return l;
}

std::string lattice_to_dot(const SubcatEngine& engine, const Lattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    const Triple& t = l.nodes[i];
    out << "  n" << i << " [label=\"K=" << subgroup_label(t.k) << ";H=" << subgroup_label(t.h)
        << ";dim=" << engine.dim(t) << ";flags=" << flags_string(engine.classify(t)) << "\"];\n";
  }
  for (const auto& [a, b] : l.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qdl
