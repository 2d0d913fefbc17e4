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

#include "subcat.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"
#include "linear_zn.hpp"

namespace qdl {

bool Triple::b_trivial() const {
  return std::all_of(b.begin(), b.end(), [](int v) { return v == 0; });
}

bool operator<(const Triple& a, const Triple& c) {
  if (a.k != c.k) return a.k < c.k;
  if (a.h != c.h) return a.h < c.h;
  return a.b < c.b;
}

SubcatEngine::SubcatEngine(DoubleDataPtr data, std::size_t cap) : data_(std::move(data)), cap_(cap) {}

Triple SubcatEngine::make_triple(const Subgroup& k, const Subgroup& h, std::vector<int> b) const {
  QDL_ENSURE(b.size() == k.size() * h.size(), ErrorCode::Internal, "pairing table has wrong size");
  return Triple{k, h, field_order(), std::move(b)};
}

Triple SubcatEngine::trivial_pairing(const Subgroup& k, const Subgroup& h) const {
  return make_triple(k, h, std::vector<int>(k.size() * h.size(), 0));
}

Triple SubcatEngine::trivial_triple() const {
  return trivial_pairing(group().trivial_subgroup(), group().whole());
}

Triple SubcatEngine::whole_triple() const { return trivial_pairing(group().whole(), group().trivial_subgroup()); }

long SubcatEngine::dim(const Triple& t) const {
  return static_cast<long>(t.k.size()) * (group().order() / static_cast<long>(t.h.size()));
}

std::vector<Triple> SubcatEngine::enumerate_bicharacters(const Subgroup& k, const Subgroup& h) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  const int nh = static_cast<int>(h.size());
  auto var = [&](Elem x, Elem y) { return k.position(x) * nh + h.position(y); };
  LinearSystemZn sys(field_order(), static_cast<int>(k.size()) * nh);
  for (Elem x : k.elements())
    for (Elem y : h.elements())
      for (Elem z : h.elements())
        sys.add_equation({{var(x, g.mul(y, z)), 1}, {var(x, y), -1}, {var(x, z), -1}}, -d.beta_n(x, y, z));
  for (Elem w : k.elements())
    for (Elem x : k.elements())
      for (Elem y : h.elements())
        sys.add_equation({{var(g.mul(w, x), y), 1}, {var(w, y), -1}, {var(x, y), -1}}, d.beta_n(y, w, x));
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xi = g.inv(x);
    for (Elem kk : k.elements())
      for (Elem hh : h.elements()) {
        const long rhs = d.beta_n(kk, x, hh) + d.beta_n(kk, g.mul(x, hh), xi) - d.beta_n(kk, x, xi);
        sys.add_equation({{var(g.conj(xi, kk), hh), 1}, {var(kk, g.conj(x, hh)), -1}}, rhs);
      }
  }
  std::vector<Triple> out;
  for (auto& sol : sys.solve_all(cap_)) out.push_back(make_triple(k, h, std::move(sol)));
  return out;
}

bool SubcatEngine::is_bicharacter(const Triple& t) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  if (t.b.size() != t.k.size() * t.h.size() || t.n != field_order()) return false;
  for (Elem x : t.k.elements())
    for (Elem y : t.h.elements())
      for (Elem z : t.h.elements())
        if (mod(static_cast<long>(t.value(x, g.mul(y, z))) - t.value(x, y) - t.value(x, z) + d.beta_n(x, y, z)) != 0)
          return false;
  for (Elem w : t.k.elements())
    for (Elem x : t.k.elements())
      for (Elem y : t.h.elements())
        if (mod(static_cast<long>(t.value(g.mul(w, x), y)) - t.value(w, y) - t.value(x, y) - d.beta_n(y, w, x)) != 0)
          return false;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xi = g.inv(x);
    for (Elem kk : t.k.elements())
      for (Elem hh : t.h.elements()) {
        const long rhs = d.beta_n(kk, x, hh) + d.beta_n(kk, g.mul(x, hh), xi) - d.beta_n(kk, x, xi);
        if (mod(static_cast<long>(t.value(g.conj(xi, kk), hh)) - t.value(kk, g.conj(x, hh)) - rhs) != 0) return false;
      }
  }
  return true;
}

bool SubcatEngine::is_valid(const Triple& t) const {
  const FiniteGroup& g = group();
  if (t.k.mask().size() != static_cast<std::size_t>(g.order()) || t.h.mask().size() != t.k.mask().size()) return false;
  if (!t.k.is_normal() || !t.h.is_normal()) return false;
  if (!g.centralize_each_other(t.k, t.h)) return false;
  return is_bicharacter(t);
}

void SubcatEngine::check_counting(const Subgroup& k, const Subgroup& h) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  const int hidx = g.normal_subgroup_index(h);
  for (int c = 0; c < g.num_classes(); ++c) {
    const Elem a = g.class_reps()[c];
    if (!k.contains(a)) continue;
    {
      std::lock_guard<std::mutex> lock(cache_->counting_mutex);
      auto& done = cache_->counting_done;
      if (done.empty()) done.assign(g.num_classes(), std::vector<bool>(g.normal_subgroups().size(), false));
      if (done[c][hidx]) continue;
      done[c][hidx] = true;
    }
    const int n = g.order();
    std::vector<int> beta(static_cast<std::size_t>(n) * n, 0);
    for (Elem x : h.elements())
      for (Elem y : h.elements()) beta[static_cast<std::size_t>(x) * n + y] = d.cocycle().beta(a, x, y);
    const auto lambdas = degree_one_characters(g, d.cocycle().modulus(), beta, h, field_order(), cap_);
    const Subgroup& cent = g.rep_centralizer(c);
    const long expected = static_cast<long>(cent.size() / h.size());
    std::size_t checked = 0, failed = 0;
    for (const auto& lambda : lambdas) {
      bool invariant = true;
      for (Elem x : cent.elements()) {
        const Elem xi = g.inv(x);
        for (Elem y : h.elements()) {
          const long f = d.beta_n(a, x, y) + d.beta_n(a, g.mul(x, y), xi) - d.beta_n(a, x, xi);
          if (mod(static_cast<long>(lambda[h.position(y)]) - f - lambda[h.position(g.conj(x, y))]) != 0) {
            invariant = false;
            break;
          }
        }
        if (!invariant) break;
      }
      if (!invariant) continue;
      long sum = 0;
      for (int i = d.class_offset(c); i < d.size() && d.simple(i).cls == c; ++i) {
        bool match = true;
        for (Elem y : h.elements()) match = match && d.chi_root(i, y) == lambda[h.position(y)];
        if (match) sum += static_cast<long>(d.simple(i).degree) * d.simple(i).degree;
      }
      ++checked;
      if (sum != expected) ++failed;
    }
    std::lock_guard<std::mutex> lock(cache_->counting_mutex);
    cache_->counting.checked += checked;
    cache_->counting.failed += failed;
  }
}

CountingStats SubcatEngine::counting_stats() const {
  std::lock_guard<std::mutex> lock(cache_->counting_mutex);
  return cache_->counting;
}

const std::vector<Triple>& SubcatEngine::all_triples() const {
  std::call_once(cache_->once, [this] {
    const FiniteGroup& g = group();
    const auto& normals = g.normal_subgroups();
    std::vector<Triple> out;
    for (const auto& [ki, hi] : g.centralizing_pairs()) {
      check_counting(normals[ki], normals[hi]);
      for (auto& t : enumerate_bicharacters(normals[ki], normals[hi])) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    std::set<std::vector<int>> seen;
    for (const auto& t : out)
      QDL_ENSURE(seen.insert(build_subcat(t)).second, ErrorCode::Internal, "two triples give the same subcategory");
    cache_->triples = std::move(out);
  });
  return cache_->triples;
}

std::vector<int> SubcatEngine::build_subcat(const Triple& t) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  std::vector<int> out;
  long total = 0;
  for (int c = 0; c < g.num_classes(); ++c) {
    const Elem a = g.class_reps()[c];
    if (!t.k.contains(a)) continue;
    long sum = 0;
    for (int i = d.class_offset(c); i < d.size() && d.simple(i).cls == c; ++i) {
      bool match = true;
      for (Elem y : t.h.elements())
        if (d.chi_root(i, y) != t.value(a, y)) {
          match = false;
          break;
        }
      if (!match) continue;
      out.push_back(i);
      sum += static_cast<long>(d.simple(i).degree) * d.simple(i).degree;
      total += d.simple(i).dim * d.simple(i).dim;
    }
    QDL_ENSURE(sum == static_cast<long>(g.rep_centralizer(c).size() / t.h.size()), ErrorCode::DimensionMismatch,
               "counting identity fails at class " + std::to_string(c));
  }
  QDL_ENSURE(total == dim(t), ErrorCode::DimensionMismatch,
             "dim S(K,H,B) = " + std::to_string(total) + ", expected " + std::to_string(dim(t)));
  return out;
}

Triple SubcatEngine::triple_of(const std::vector<int>& simples) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  auto fail = [](const std::string& why) { return Error(ErrorCode::NotASubcategory, why); };
  std::vector<int> sorted = simples;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int i : sorted)
    if (i < 0 || i >= d.size()) throw fail("simple index out of range");
  if (sorted.empty() || sorted[0] != 0) throw fail("set does not contain the unit object");

  std::vector<bool> classes(g.num_classes(), false);
  std::vector<Elem> reps;
  for (int i : sorted)
    if (!classes[d.simple(i).cls]) {
      classes[d.simple(i).cls] = true;
      reps.push_back(d.simple(i).rep);
    }
  const Subgroup k = g.normal_closure(reps);
  for (int c = 0; c < g.num_classes(); ++c)
    if (k.contains(g.class_reps()[c]) && !classes[c]) throw fail("support is not a subgroup");

  std::vector<bool> hmask(g.order(), true);
  for (int i : sorted) {
    if (d.simple(i).cls != 0) continue;
    for (Elem y = 0; y < g.order(); ++y)
      if (d.chi_root(i, y) != 0) hmask[y] = false;
  }
  if (!g.is_subgroup(hmask)) throw fail("kernel intersection is not a subgroup");
  const Subgroup h = g.make_subgroup(hmask);
  if (!g.centralize_each_other(k, h)) throw fail("support and kernel do not centralize each other");

  const int nh = static_cast<int>(h.size());
  std::vector<int> b(k.size() * h.size(), -1);
  for (int i : sorted) {
    const SimpleObject& s = d.simple(i);
    const Elem a = s.rep;
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem xi = g.inv(x);
      const Elem kk = g.conj(xi, a);
      for (Elem y : h.elements()) {
        const Elem u = g.conj(x, y);
        if (!g.commute(a, u)) throw fail("kernel element outside the centralizer");
        const int r = d.chi_root(i, u);
        if (r < 0) throw fail("character is not scalar on the kernel");
        const int v = mod(d.beta_n(a, x, y) + d.beta_n(a, g.mul(x, y), xi) - d.beta_n(a, x, xi) + r);
        int& slot = b[static_cast<std::size_t>(k.position(kk)) * nh + h.position(y)];
        if (slot >= 0 && slot != v) throw fail("inconsistent pairing values");
        slot = v;
      }
    }
  }
  Triple t = make_triple(k, h, std::move(b));
  if (!is_bicharacter(t)) throw fail("recovered pairing is not a G-invariant omega-bicharacter");
  if (build_subcat(t) != sorted) throw fail("set is not the subcategory of its own triple");
  return t;
}

Triple SubcatEngine::centralizer(const Triple& t) const {
  const int nk = static_cast<int>(t.k.size());
  std::vector<int> b(t.k.size() * t.h.size());
  for (Elem x : t.k.elements())
    for (Elem y : t.h.elements()) b[static_cast<std::size_t>(t.h.position(y)) * nk + t.k.position(x)] = mod(-t.value(x, y));
  return make_triple(t.h, t.k, std::move(b));
}

Triple SubcatEngine::op(const Triple& t) const {
  const int nk = static_cast<int>(t.k.size());
  std::vector<int> b(t.k.size() * t.h.size());
  for (Elem x : t.k.elements())
    for (Elem y : t.h.elements()) b[static_cast<std::size_t>(t.h.position(y)) * nk + t.k.position(x)] = t.value(x, y);
  return make_triple(t.h, t.k, std::move(b));
}

bool SubcatEngine::contains(const Triple& t1, const Triple& t2) const {
  if (!t1.k.subset_of(t2.k) || !t2.h.subset_of(t1.h)) return false;
  for (Elem x : t1.k.elements())
    for (Elem y : t2.h.elements())
      if (t1.value(x, y) != t2.value(x, y)) return false;
  return true;
}

Triple SubcatEngine::meet_signed(const Triple& t1, const Triple& t2, int sign) const {
  const FiniteGroup& g = group();
  const DoubleData& d = *data_;
  const Subgroup kk = g.intersection(t1.k, t2.k);
  const Subgroup hh = g.intersection(t1.h, t2.h);
  std::vector<bool> mask(g.order(), false);
  for (Elem a : kk.elements()) {
    bool in = true;
    for (Elem y : hh.elements()) in = in && t1.value(a, y) == t2.value(a, y);
    mask[a] = in;
  }
  QDL_ENSURE(g.is_subgroup(mask), ErrorCode::Internal, "kernel of phi is not a subgroup");
  const Subgroup ker = g.make_subgroup(mask);
  const Subgroup prod = g.product(t1.h, t2.h);
  const int np = static_cast<int>(prod.size());
  std::vector<int> psi(ker.size() * prod.size(), -1);
  for (Elem a : ker.elements())
    for (Elem y1 : t1.h.elements())
      for (Elem y2 : t2.h.elements()) {
        const int v = mod(-sign * d.beta_n(a, y1, y2) + t1.value(a, y1) + t2.value(a, y2));
        int& slot = psi[static_cast<std::size_t>(ker.position(a)) * np + prod.position(g.mul(y1, y2))];
        QDL_ENSURE(slot < 0 || slot == v, ErrorCode::Internal, "psi is not well-defined");
        slot = v;
      }
  return make_triple(ker, prod, std::move(psi));
}

Triple SubcatEngine::meet(const Triple& t1, const Triple& t2) const {
  Triple m = meet_signed(t1, t2, 1);
  QDL_ENSURE(is_bicharacter(m), ErrorCode::Internal, "meet pairing is not an omega-bicharacter");
  return m;
}

Triple SubcatEngine::join(const Triple& t1, const Triple& t2) const {
  Triple j = op(meet_signed(op(t1), op(t2), -1));
  QDL_ENSURE(is_bicharacter(j), ErrorCode::Internal, "join pairing is not an omega-bicharacter");
  return j;
}

Triple SubcatEngine::muger_center(const Triple& t) const { return meet(t, centralizer(t)); }

bool SubcatEngine::nondegenerate_pairing(const Triple& t) const {
  const FiniteGroup& g = group();
  if (g.product(t.h, t.k).size() != static_cast<std::size_t>(g.order())) return false;
  const Subgroup kh = g.intersection(t.k, t.h);
  for (Elem a : kh.elements()) {
    if (a == 0) continue;
    bool radical = true;
    for (Elem b : kh.elements())
      if (mod(static_cast<long>(t.value(a, b)) + t.value(b, a)) != 0) {
        radical = false;
        break;
      }
    if (radical) return false;
  }
  return true;
}

Classification SubcatEngine::classify(const Triple& t) const {
  const FiniteGroup& g = group();
  Classification c;
  const bool k_in_h = t.k.subset_of(t.h);
  if (k_in_h) {
    c.symmetric = true;
    for (Elem x : t.k.elements())
      for (Elem y : t.k.elements())
        c.symmetric = c.symmetric && mod(static_cast<long>(t.value(x, y)) + t.value(y, x)) == 0;
    bool reps_alternating = true;
    for (Elem a : g.class_reps())
      if (t.k.contains(a)) reps_alternating = reps_alternating && t.value(a, a) == 0;
    bool all_alternating = true;
    for (Elem x : t.k.elements()) all_alternating = all_alternating && t.value(x, x) == 0;
    QDL_ENSURE(reps_alternating == all_alternating, ErrorCode::Internal,
               "alternating on representatives but not on all of K");
    c.isotropic = all_alternating;
    c.lagrangian = t.k == t.h && all_alternating;
  }
  c.nondegenerate = nondegenerate_pairing(t);
  return c;
}

bool SubcatEngine::is_prime() const {
  const FiniteGroup& g = group();
  const auto& normals = g.normal_subgroups();
  const int last = static_cast<int>(normals.size()) - 1;
  for (const auto& [ki, hi] : g.centralizing_pairs()) {
    if ((ki == last && hi == 0) || (ki == 0 && hi == last)) continue;
    if (g.product(normals[ki], normals[hi]).size() != static_cast<std::size_t>(g.order())) continue;
    for (const auto& t : enumerate_bicharacters(normals[ki], normals[hi]))
      if (nondegenerate_pairing(t)) return false;
  }
  return true;
}

int SubcatEngine::nondegenerate_count() const {
  const FiniteGroup& g = group();
  const auto& normals = g.normal_subgroups();
  const int last = static_cast<int>(normals.size()) - 1;
  int count = 0;
  for (const auto& [ki, hi] : g.centralizing_pairs()) {
    if ((ki == last && hi == 0) || (ki == 0 && hi == last)) continue;
    if (g.product(normals[ki], normals[hi]).size() != static_cast<std::size_t>(g.order())) continue;
    for (const auto& t : enumerate_bicharacters(normals[ki], normals[hi]))
      if (nondegenerate_pairing(t)) ++count;
  }
  return count;
}

Cyclo SubcatEngine::gauss_sum(const Triple& t) const {
  const FiniteGroup& g = group();
  const CycloContext& ctx = data_->field();
  Cyclo sum = ctx.zero();
  for (int c = 0; c < g.num_classes(); ++c) {
    const Elem a = g.class_reps()[c];
    if (t.k.contains(a) && t.h.contains(a)) sum += ctx.root(t.value(a, a)) * mpq_class(static_cast<long>(g.class_size(c)));
  }
  return sum * mpq_class(g.order(), static_cast<long>(t.h.size()));
}

Cyclo SubcatEngine::gauss_sum_direct(const Triple& t) const { return data_->gauss_sum(build_subcat(t)); }

Cyclo SubcatEngine::gauss_sum_nondegenerate(const Triple& t) const {
  const FiniteGroup& g = group();
  const CycloContext& ctx = data_->field();
  const Subgroup kh = g.intersection(t.k, t.h);
  Cyclo sum = ctx.zero();
  for (Elem a : kh.elements()) sum += ctx.root(t.value(a, a));
  return sum * mpq_class(static_cast<long>(t.k.size()), static_cast<long>(kh.size()));
}

std::complex<double> SubcatEngine::central_charge(const Triple& t) const {
  return gauss_sum(t).to_complex() / std::sqrt(static_cast<double>(dim(t)));
}

Triple SubcatEngine::adjoint(const Triple& t) const {
  if (data_->twisted()) throw Error(ErrorCode::UnsupportedTriple, "adjoint formula requires trivial omega");
  if (!t.b_trivial()) throw Error(ErrorCode::UnsupportedTriple, "adjoint formula requires B = 1");
  const FiniteGroup& g = group();
  const Subgroup k = g.commutator_subgroup(t.k);
  const Subgroup h = g.intersection(g.centralizer(t.k), g.preimage_of_center_of_quotient(t.h));
  return trivial_pairing(k, h);
}

namespace {

const Subgroup& clamp(const std::vector<Subgroup>& series, int n) {
  return series[std::min<std::size_t>(static_cast<std::size_t>(n), series.size() - 1)];
}

}  // namespace

Triple SubcatEngine::upper_central_term(int n) const {
  if (data_->twisted()) throw Error(ErrorCode::UnsupportedTriple, "central series formula requires trivial omega");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "central series terms start at n = 1");
  const FiniteGroup& g = group();
  const CentralSeries s = g.central_series();
  const Subgroup h = g.intersection(g.centralizer(clamp(s.lower, n - 1)), clamp(s.upper, n));
  return trivial_pairing(clamp(s.lower, n), h);
}

Triple SubcatEngine::lower_central_term(int n) const {
  if (data_->twisted()) throw Error(ErrorCode::UnsupportedTriple, "central series formula requires trivial omega");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "central series terms start at n = 1");
  const FiniteGroup& g = group();
  const CentralSeries s = g.central_series();
  const Subgroup k = g.intersection(g.centralizer(clamp(s.lower, n - 1)), clamp(s.upper, n));
  return trivial_pairing(k, clamp(s.lower, n));
}

Lattice SubcatEngine::lattice() const {
  Lattice l;
  l.nodes = all_triples();
  const int n = static_cast<int>(l.nodes.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) le[i][j] = contains(l.nodes[i], l.nodes[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      bool covers = true;
      for (int m = 0; m < n && covers; ++m)
        if (m != i && m != j && le[i][m] && le[m][j]) covers = false;
      if (covers) l.edges.emplace_back(i, j);
    }
  return l;
}

}  // namespace qdl
