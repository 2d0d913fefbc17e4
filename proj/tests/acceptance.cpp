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

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "builtins.hpp"
#include "error.hpp"
#include "oracle.hpp"

using namespace qdl;

namespace {

constexpr double kFloatTol = 1e-9;
constexpr double kBijectionSeconds = 60.0;
constexpr double kPrimeS4Seconds = 600.0;
constexpr double kCocycleSeconds = 60.0;
constexpr std::size_t kS4Cap = 24;
constexpr int kCoboundaryTrials = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

DoubleDataPtr make(const ThreeCocycle& w) { return std::make_shared<const DoubleData>(w); }

struct Case {
  std::string label;
  DoubleDataPtr data;
};

std::vector<Case> test_cases() {
  std::vector<Case> out;
  for (const char* g : {"Z2", "Z3", "Z4", "Z5", "Z2xZ2", "S3", "D4", "Q8", "A4"})
    out.push_back({g, make(ThreeCocycle::trivial(builtin_group(g)))});
  for (const auto& [n, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {6, 1}}) {
    const std::string g = "Z" + std::to_string(n);
    out.push_back({g + " cyclic:" + std::to_string(n) + "," + std::to_string(q),
                   make(ThreeCocycle::builtin_cyclic(builtin_group(g), n, q))});
  }
  return out;
}

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

void report(int n, const std::string& title, const Result& r) {
  std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << title;
  if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
  std::cout << std::endl;
}

Result guarded(const std::function<void(Result&)>& body) {
  Result r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  return r;
}

Result bijection() {
  return guarded([](Result& r) {
    const auto t0 = Clock::now();
    std::ostringstream counts;
    for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
      SubcatEngine e(make(ThreeCocycle::trivial(builtin_group(g))));
      const ClosureReport c = certify(e);
      if (!c.match) r.fail(std::string(g) + ": " + c.mismatches.front());
      if (c.closed_sets.size() != e.all_triples().size()) r.fail(std::string(g) + ": counts differ");
      if (std::string(g) == "Z2" && e.all_triples().size() != 5) r.fail("Z2 count is not 5");
      counts << g << "=" << e.all_triples().size() << " ";
    }
    const double s = seconds_since(t0);
    if (s >= kBijectionSeconds) r.fail("took " + std::to_string(s) + " s");
    if (r.pass) r.detail = counts.str() + std::to_string(s) + " s";
  });
}

Result cyclic_remark() {
  return guarded([](Result& r) {
    auto engine = [](const char* g) { return SubcatEngine(make(ThreeCocycle::trivial(builtin_group(g)))); };
    const int z3 = engine("Z3").nondegenerate_count();
    const int z5 = engine("Z5").nondegenerate_count();
    if (z3 != 2) r.fail("nondegenerate_count(Z3) = " + std::to_string(z3));
    if (z5 != 4) r.fail("nondegenerate_count(Z5) = " + std::to_string(z5));
    if (!engine("Z4").is_prime()) r.fail("Z4 not prime");
    if (!engine("Z2").is_prime()) r.fail("Z2 not prime");
  });
}

Result symmetric_groups() {
  return guarded([](Result& r) {
    if (!SubcatEngine(make(ThreeCocycle::trivial(builtin_group("S3")))).is_prime()) r.fail("S3 not prime");
    const auto t0 = Clock::now();
    if (!SubcatEngine(make(ThreeCocycle::trivial(builtin_group("S4", kS4Cap)))).is_prime()) r.fail("S4 not prime");
    const double s = seconds_since(t0);
    if (s >= kPrimeS4Seconds) r.fail("S4 took " + std::to_string(s) + " s");
    if (r.pass) r.detail = "S4 in " + std::to_string(s) + " s";
  });
}

Result twisted_sanity() {
  return guarded([](Result& r) {
    SubcatEngine e(make(ThreeCocycle::builtin_cyclic(builtin_group("Z2"), 2, 1)));
    const CycloContext& f = e.data().field();
    const auto& ts = e.all_triples();
    if (ts.size() != 5) r.fail(std::to_string(ts.size()) + " triples");
    std::vector<int> exps;
    for (const auto& t : ts) {
      if (t == e.trivial_triple() || t == e.whole_triple() || !e.classify(t).nondegenerate) continue;
      if (t.k.size() != 2 || t.h.size() != 2) {
        r.fail("unexpected nondegenerate triple");
        continue;
      }
      const int b = t.value(1, 1);
      exps.push_back(b);
      const Cyclo expected_tau = f.one() + f.root(b);
      if (e.gauss_sum(t) != expected_tau || e.gauss_sum_direct(t) != expected_tau) r.fail("Gauss sum is not 1 +- i");
      const double angle = (b == 1 ? 1.0 : -1.0) * M_PI / 4;
      if (std::abs(e.central_charge(t) - std::polar(1.0, angle)) > kFloatTol) r.fail("central charge off");
    }
    std::sort(exps.begin(), exps.end());
    if (exps != std::vector<int>{1, 3}) r.fail("nondegenerate pairings are not B(1,1) = +-i");
    if (e.is_prime()) r.fail("is_prime = true");
  });
}

Result dimension_duality(const std::vector<Case>& cases) {
  return guarded([&](Result& r) {
    std::size_t total = 0;
    for (const auto& c : cases) {
      SubcatEngine e(c.data);
      const long order = e.group().order();
      for (const auto& t : e.all_triples()) {
        ++total;
        const auto s = e.build_subcat(t);
        long dim = 0;
        for (int x : s) dim += c.data->simple(x).dim * c.data->simple(x).dim;
        if (dim != static_cast<long>(t.k.size()) * (order / static_cast<long>(t.h.size())))
          r.fail(c.label + ": dim mismatch");
        const Triple z = e.centralizer(t);
        if (e.dim(t) * e.dim(z) != order * order) r.fail(c.label + ": dim product");
        if (e.centralizer(z) != t) r.fail(c.label + ": centralizer not involutive");
        if (e.triple_of(s) != t) r.fail(c.label + ": round trip");
      }
    }
    if (r.pass) r.detail = std::to_string(total) + " triples over " + std::to_string(cases.size()) + " cases";
  });
}

Result gauss_sums(const std::vector<Case>& cases) {
  return guarded([&](Result& r) {
    for (const auto& c : cases) {
      SubcatEngine e(c.data);
      for (const auto& t : e.all_triples())
        if (e.gauss_sum(t) != e.gauss_sum_direct(t)) r.fail(c.label + ": formula differs from sum of theta d^2");
      const Triple w = e.whole_triple();
      if (e.gauss_sum(w) != c.data->field().rational(e.group().order())) r.fail(c.label + ": tau(whole)");
      if (std::abs(e.central_charge(w) - std::complex<double>(1.0, 0.0)) > kFloatTol) r.fail(c.label + ": zeta(whole)");
    }
  });
}

Result lattice_laws(const std::vector<Case>& cases) {
  return guarded([&](Result& r) {
    std::size_t pairs = 0;
    for (const auto& c : cases) {
      SubcatEngine e(c.data);
      const auto& ts = e.all_triples();
      std::vector<SimpleSet> sets;
      for (const auto& t : ts) sets.push_back(e.build_subcat(t));
      std::unique_ptr<FusionOracle> oracle;
      if (!c.data->twisted()) oracle = std::make_unique<FusionOracle>(c.data);
      for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
          ++pairs;
          const Triple &a = ts[i], &b = ts[j];
          const Triple m = e.meet(a, b), jn = e.join(a, b);
          if (oracle) {
            SimpleSet in, un;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(in));
            std::set_union(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(un));
            if (e.build_subcat(m) != in) r.fail(c.label + ": meet differs from intersection");
            if (e.build_subcat(jn) != oracle->fusion_closure(un)) r.fail(c.label + ": join differs from closure");
          }
          if (e.meet(a, a) != a || e.join(a, a) != a) r.fail(c.label + ": idempotence");
          if (m != e.meet(b, a) || jn != e.join(b, a)) r.fail(c.label + ": commutativity");
          if (e.meet(a, jn) != a || e.join(a, m) != a) r.fail(c.label + ": absorption");
        }
    }
    if (r.pass) r.detail = std::to_string(pairs) + " pairs";
  });
}

Result cocycle_suite() {
  return guarded([](Result& r) {
    const auto t0 = Clock::now();
    std::size_t runs = 0;
    auto check = [&](const ThreeCocycle& w, const std::string& label) {
      ++runs;
      for (const auto& c : w.validation_checks())
        if (!c.passed) r.fail(label + ": " + c.name + " at " + c.witness);
      for (const auto& c : w.identity_checks())
        if (!c.passed) r.fail(label + ": " + c.name + " at " + c.witness);
    };
    for (int n = 2; n <= 8; ++n) {
      const GroupPtr g = builtin_group("Z" + std::to_string(n));
      for (int q = 0; q < n; ++q) check(ThreeCocycle::builtin_cyclic(g, n, q), g->name() + " q=" + std::to_string(q));
    }
    std::mt19937 rng(20260101);
    for (const auto& name : builtin_group_names()) {
      const GroupPtr g = builtin_group(name);
      if (g->order() > 8) continue;
      ThreeCocycle base = ThreeCocycle::trivial(g);
      if (name == "Z2xZ4") {
        const GroupPtr z2 = builtin_group("Z2"), z4 = builtin_group("Z4");
        base = ThreeCocycle::builtin_cyclic(z4, 4, 1).pullback(g, product_projection(*z2, *z4, 1));
      } else if (name[0] == 'Z' && name.find('x') == std::string::npos) {
        base = ThreeCocycle::builtin_cyclic(g, g->order(), 1);
      }
      const int n = g->order();
      const int m = n;
      std::uniform_int_distribution<int> dist(0, m - 1);
      for (int trial = 0; trial < kCoboundaryTrials; ++trial) {
        std::vector<int> mu(static_cast<std::size_t>(n) * n, 0);
        for (int x = 1; x < n; ++x)
          for (int y = 1; y < n; ++y) mu[static_cast<std::size_t>(x) * n + y] = dist(rng);
        check(base.product(ThreeCocycle::coboundary(g, m, mu)), name + " coboundary " + std::to_string(trial));
      }
    }
    const double s = seconds_since(t0);
    if (s >= kCocycleSeconds) r.fail("took " + std::to_string(s) + " s");
    if (r.pass) r.detail = std::to_string(runs) + " cocycles in " + std::to_string(s) + " s";
  });
}

Result central_series() {
  return guarded([](Result& r) {
    for (const char* g : {"D4", "S3"}) {
      const DoubleDataPtr d = make(ThreeCocycle::trivial(builtin_group(g)));
      SubcatEngine e(d);
      const FusionOracle o(d);
      const auto up = o.upper_series();
      const auto lo = o.lower_series();
      const std::size_t len = std::max(up.size(), lo.size()) + 1;
      for (std::size_t n = 1; n <= len; ++n) {
        if (e.build_subcat(e.upper_central_term(static_cast<int>(n))) != up[std::min(n, up.size() - 1)])
          r.fail(std::string(g) + ": upper term " + std::to_string(n));
        if (e.build_subcat(e.lower_central_term(static_cast<int>(n))) != lo[std::min(n, lo.size() - 1)])
          r.fail(std::string(g) + ": lower term " + std::to_string(n));
      }
    }
  });
}

Result character_engine(const std::vector<Case>& cases) {
  return guarded([&](Result& r) {
    std::size_t tables = 0, counted = 0;
    for (const auto& name : builtin_group_names()) {
      const GroupPtr g = builtin_group(name);
      ++tables;
      if (!check_orthogonality(ordinary_table(g, CycloContext::get(g->exponent()))).ok())
        r.fail(name + ": ordinary table");
    }
    for (const auto& c : cases) {
      const FiniteGroup& g = c.data->group();
      for (int cls = 0; cls < g.num_classes(); ++cls) {
        ++tables;
        if (!check_projective(c.data->table(cls)).ok()) r.fail(c.label + ": projective table of class " + std::to_string(cls));
      }
      SubcatEngine e(c.data);
      e.all_triples();
      const CountingStats s = e.counting_stats();
      counted += s.checked;
      if (s.failed != 0 || s.checked == 0) r.fail(c.label + ": counting identity");
    }
    if (r.pass) r.detail = std::to_string(tables) + " tables, " + std::to_string(counted) + " counting checks";
  });
}

}  // namespace

int main() {
  const std::vector<Case> cases = test_cases();
  std::vector<Result> results;
  results.push_back(bijection());
  report(1, "bijection certification against the fusion-closure oracle", results.back());
  results.push_back(cyclic_remark());
  report(2, "nondegenerate counts for Z3, Z5; Z2 and Z4 prime", results.back());
  results.push_back(symmetric_groups());
  report(3, "S3 and S4 prime", results.back());
  results.push_back(twisted_sanity());
  report(4, "double semion triples, Gauss sums and central charges", results.back());
  results.push_back(dimension_duality(cases));
  report(5, "dimension and duality laws", results.back());
  results.push_back(gauss_sums(cases));
  report(6, "Gauss sum double computation", results.back());
  results.push_back(lattice_laws(cases));
  report(7, "lattice laws", results.back());
  results.push_back(cocycle_suite());
  report(8, "cocycle identity suite", results.back());
  results.push_back(central_series());
  report(9, "central series against iterated adjoint and commutator", results.back());
  results.push_back(character_engine(cases));
  report(10, "character engine and counting identity", results.back());
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}
