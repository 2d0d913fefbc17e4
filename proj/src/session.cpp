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

#include "session.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "error.hpp"
#include "oracle.hpp"

namespace qdl {

namespace {

Json subgroup_entry(const FiniteGroup& g, const Subgroup& s) {
  return Json{{"index", g.normal_subgroup_index(s)}, {"order", s.size()}, {"elements", s.elements()}};
}

Json series_json(const FiniteGroup& g, const std::vector<Subgroup>& series) {
  Json out = Json::array();
  for (const auto& s : series) out.push_back(subgroup_entry(g, s));
  return out;
}

std::string complex_string(std::complex<double> z) {
  std::ostringstream out;
  out.precision(12);
  out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

constexpr double kCentralChargeTol = 1e-9;

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"passed", passed()}, {"checks", arr}};
}

Session::Session(const SessionOptions& opts)
    : opts_(opts),
      group_(load_group(opts.group, opts.order_cap)),
      omega_(load_cocycle(group_, opts.cocycle, opts.validate_cocycle)) {}

const DoubleDataPtr& Session::data() const {
  std::call_once(built_, [this] {
    omega_.validate();
    data_ = std::make_shared<const DoubleData>(omega_);
    engine_ = std::make_unique<SubcatEngine>(data_, opts_.solution_cap);
  });
  return data_;
}

const SubcatEngine& Session::engine() const {
  data();
  return *engine_;
}

Json Session::group_info() const {
  const FiniteGroup& g = *group_;
  Json classes = Json::array();
  for (int c = 0; c < g.num_classes(); ++c)
    classes.push_back(Json{{"rep", g.class_reps()[c]}, {"size", g.class_size(c)}, {"elements", g.class_members(c)}});
  Json normals = Json::array();
  for (const auto& s : g.normal_subgroups()) normals.push_back(subgroup_entry(g, s));
  const CentralSeries cs = g.central_series();
  return Json{{"name", g.name()},
              {"order", g.order()},
              {"exponent", g.exponent()},
              {"num_classes", g.num_classes()},
              {"classes", classes},
              {"normal_subgroups", normals},
              {"center", subgroup_entry(g, g.center())},
              {"upper_central_series", series_json(g, cs.upper)},
              {"lower_central_series", series_json(g, cs.lower)},
              {"cocycle_modulus", omega_.modulus()},
              {"cocycle_trivial", omega_.is_trivial()}};
}

Json Session::subcats_json() const {
  const SubcatEngine& e = engine();
  Json rows = Json::array();
  const auto& ts = e.all_triples();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Json r = triple_to_json(e, ts[i]);
    r["id"] = i;
    rows.push_back(std::move(r));
  }
  return Json{{"group", group_->name()}, {"field_order", e.field_order()}, {"count", ts.size()}, {"triples", rows}};
}

std::string Session::subcats_text() const {
  const SubcatEngine& e = engine();
  std::ostringstream out;
  const auto& ts = e.all_triples();
  out << "# " << group_->name() << ": " << ts.size() << " fusion subcategories (B over zeta_" << e.field_order() << ")\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Triple& t = ts[i];
    out << i << "\tK=" << subgroup_label(t.k) << "\tH=" << subgroup_label(t.h) << "\tB=[";
    for (std::size_t j = 0; j < t.b.size(); ++j) out << (j ? "," : "") << t.b[j];
    out << "]\tdim=" << e.dim(t) << "\tflags=" << flags_string(e.classify(t)) << "\ttau=" << e.gauss_sum(t).to_string()
        << "\tzeta=" << complex_string(e.central_charge(t)) << "\n";
  }
  return out.str();
}

Json Session::lattice_json() const { return lattice_to_json(engine(), engine().lattice()); }

std::string Session::lattice_dot() const { return lattice_to_dot(engine(), engine().lattice()); }

Json Session::invariants(const Json& request) const {
  const SubcatEngine& e = engine();
  const Triple t = triple_from_json(e, request);
  Json out = triple_to_json(e, t);
  out["centralizer"] = triple_to_json(e, e.centralizer(t));
  out["muger_center"] = triple_to_json(e, e.muger_center(t));
  out["tau_direct"] = cyclo_to_json(e.gauss_sum_direct(t));
  if (e.classify(t).nondegenerate) out["tau_nondegenerate"] = cyclo_to_json(e.gauss_sum_nondegenerate(t));
  if (!data()->twisted() && t.b_trivial()) out["adjoint"] = triple_to_json(e, e.adjoint(t));
  out["is_prime"] = e.is_prime();
  out["nondegenerate_count"] = e.nondegenerate_count();
  return out;
}

VerifyReport Session::verify() const {
  VerifyReport rep;
  auto run = [&rep](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, ""};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("InternalError: ") + e.what();
    }
    rep.checks.push_back(std::move(r));
    return rep.checks.back().passed;
  };

  bool cocycle_ok = true;
  for (const auto& c : omega_.validation_checks())
    cocycle_ok &= run("cocycle." + c.name, [&] { return c.passed ? "" : "NotACocycle: " + c.witness; });
  for (const auto& c : omega_.identity_checks())
    cocycle_ok &= run("cocycle." + c.name, [&] { return c.passed ? "" : "IdentityViolation: " + c.witness; });
  if (!cocycle_ok) {
    rep.checks.push_back({"engine", false, "skipped: cocycle is invalid"});
    return rep;
  }

  const DoubleData& d = *data();
  const SubcatEngine& e = engine();
  const FiniteGroup& g = *group_;
  const long order = g.order();

  run("characters.ordinary", [&] {
    const auto report = check_orthogonality(ordinary_table(group_, d.field()));
    return report.ok() ? "" : std::string("orthogonality fails");
  });
  run("characters.projective", [&] {
    for (int c = 0; c < g.num_classes(); ++c)
      if (!check_projective(d.table(c)).ok()) return "class " + std::to_string(c);
    return std::string();
  });
  run("double.dimension", [&] {
    long total = 0;
    for (const auto& s : d.simples()) total += s.dim * s.dim;
    return total == order * order ? "" : "sum of dim^2 is " + std::to_string(total);
  });
  if (!d.twisted())
    run("double.centralize-vs-s-matrix", [&] {
      const ModularData& md = d.modular_data();
      for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
          if (d.centralize(i, j) != (md.s[i][j] == d.field().rational(d.simple(i).dim * d.simple(j).dim)))
            return "pair " + std::to_string(i) + "," + std::to_string(j);
      return std::string();
    });

  const auto& ts = e.all_triples();
  run("subcat.counting-identity", [&] {
    const CountingStats s = e.counting_stats();
    return s.failed == 0 ? "" : std::to_string(s.failed) + " of " + std::to_string(s.checked) + " fail";
  });
  run("oracle.certify", [&] {
    const ClosureReport r = certify(e);
    return r.match ? "" : r.mismatches.front();
  });

  std::vector<SimpleSet> sets;
  for (const auto& t : ts) sets.push_back(e.build_subcat(t));
  auto per_triple = [&](const std::string& name, const std::function<bool(std::size_t)>& ok) {
    run(name, [&] {
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (!ok(i)) return "triple " + std::to_string(i);
      return std::string();
    });
  };
  per_triple("invariant.round-trip", [&](std::size_t i) { return e.triple_of(sets[i]) == ts[i]; });
  per_triple("invariant.dimension", [&](std::size_t i) {
    long total = 0;
    for (int x : sets[i]) total += d.simple(x).dim * d.simple(x).dim;
    return total == e.dim(ts[i]) && e.dim(ts[i]) * e.dim(e.centralizer(ts[i])) == order * order;
  });
  per_triple("invariant.double-centralizer",
             [&](std::size_t i) { return e.centralizer(e.centralizer(ts[i])) == ts[i]; });
  per_triple("invariant.gauss-sum", [&](std::size_t i) { return e.gauss_sum(ts[i]) == e.gauss_sum_direct(ts[i]); });
  per_triple("invariant.muger-center", [&](std::size_t i) {
    return (e.muger_center(ts[i]) == e.trivial_triple()) == e.classify(ts[i]).nondegenerate;
  });
  per_triple("invariant.lagrangian-dimension",
             [&](std::size_t i) { return !e.classify(ts[i]).lagrangian || e.dim(ts[i]) == order; });
  run("invariant.whole-gauss-sum", [&] {
    const Triple w = e.whole_triple();
    if (e.gauss_sum(w) != d.field().rational(mpq_class(order))) return std::string("tau(whole) != |G|");
    if (std::abs(e.central_charge(w) - std::complex<double>(1.0, 0.0)) > kCentralChargeTol)
      return std::string("zeta(whole) != 1");
    return std::string();
  });

  auto pairwise = [&](const std::string& name, const std::function<bool(std::size_t, std::size_t)>& ok) {
    run(name, [&] {
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j)
          if (!ok(i, j)) return "pair " + std::to_string(i) + "," + std::to_string(j);
      return std::string();
    });
  };
  pairwise("lattice.meet-intersection", [&](std::size_t i, std::size_t j) {
    SimpleSet in;
    std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(in));
    return e.build_subcat(e.meet(ts[i], ts[j])) == in;
  });
  if (!d.twisted()) {
    const FusionOracle oracle(data());
    pairwise("lattice.join-closure", [&](std::size_t i, std::size_t j) {
      SimpleSet un;
      std::set_union(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(un));
      return e.build_subcat(e.join(ts[i], ts[j])) == oracle.fusion_closure(un);
    });
  }
  pairwise("lattice.join-centralizer-dual", [&](std::size_t i, std::size_t j) {
    return e.join(ts[i], ts[j]) == e.centralizer(e.meet(e.centralizer(ts[i]), e.centralizer(ts[j])));
  });
  pairwise("lattice.laws", [&](std::size_t i, std::size_t j) {
    const Triple &a = ts[i], &b = ts[j];
    return e.meet(a, a) == a && e.join(a, a) == a && e.meet(a, b) == e.meet(b, a) && e.join(a, b) == e.join(b, a) &&
           e.meet(a, e.join(a, b)) == a && e.join(a, e.meet(a, b)) == a;
  });
  run("lattice.json-round-trip", [&] {
    const Lattice l = e.lattice();
    const Lattice back = lattice_from_json(e, Json::parse(lattice_to_json(e, l).dump()));
    return back.nodes == l.nodes && back.edges == l.edges ? "" : std::string("lattice differs after re-parsing");
  });

  if (!d.twisted()) {
    const FusionOracle oracle(data());
    run("series.adjoint", [&] {
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i].b_trivial() && e.build_subcat(e.adjoint(ts[i])) != oracle.adjoint(sets[i]))
          return "triple " + std::to_string(i);
      return std::string();
    });
    run("series.central", [&] {
      const auto up = oracle.upper_series();
      const auto lo = oracle.lower_series();
      const std::size_t len = std::max(up.size(), lo.size()) + 1;
      for (std::size_t n = 1; n <= len; ++n) {
        if (e.build_subcat(e.upper_central_term(static_cast<int>(n))) != up[std::min(n, up.size() - 1)])
          return "upper term " + std::to_string(n);
        if (e.build_subcat(e.lower_central_term(static_cast<int>(n))) != lo[std::min(n, lo.size() - 1)])
          return "lower term " + std::to_string(n);
      }
      return std::string();
    });
  }
  return rep;
}

}  // namespace qdl
