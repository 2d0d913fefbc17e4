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

#include "double_data.hpp"

#include "error.hpp"

namespace qdl {

DoubleData::DoubleData(ThreeCocycle omega)
    : omega_(std::move(omega)),
      ctx_(&CycloContext::get(omega_.modulus() * omega_.group().order())),
      scale_(omega_.group().order()) {
  const FiniteGroup& g = group();
  const int k = g.num_classes();
  class_commute_.assign(k, std::vector<bool>(k, true));
  for (int ca = 0; ca < k; ++ca)
    for (int cb = 0; cb < k; ++cb)
      for (Elem x : g.class_members(ca)) {
        for (Elem y : g.class_members(cb))
          if (!g.commute(x, y)) {
            class_commute_[ca][cb] = false;
            break;
          }
        if (!class_commute_[ca][cb]) break;
      }

  for (int c = 0; c < k; ++c) {
    const Elem a = g.class_reps()[c];
    centralizers_.push_back(g.embed(g.rep_centralizer(c)));
    const EmbeddedGroup& cent = centralizers_.back();
    const int n = cent.group->order();
    std::vector<int> beta(static_cast<std::size_t>(n) * n, 0);
    if (twisted())
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) beta[x * n + y] = omega_.beta(a, cent.to_parent[x], cent.to_parent[y]);
    tables_.push_back(projective_table(cent.group, omega_.modulus(), std::move(beta), *ctx_));

    class_offset_.push_back(static_cast<int>(simples_.size()));
    const ProjCharTable& t = tables_.back();
    const long class_size = static_cast<long>(g.class_size(c));
    for (int i = 0; i < t.size(); ++i) {
      const int deg = t.degrees[i];
      Cyclo twist = t.values[i][cent.from_parent[a]] * mpq_class(1, deg);
      simples_.push_back(SimpleObject{c, a, i, deg, class_size * deg, std::move(twist)});
      std::vector<int> roots(n, -1);
      for (int x = 0; x < n; ++x) {
        const auto r = ctx_->root_exponent(t.values[i][x] * mpq_class(1, deg));
        if (r) roots[x] = *r;
      }
      roots_.push_back(std::move(roots));
    }
  }

  long total = 0;
  for (const auto& s : simples_) total += s.dim * s.dim;
  const long order = g.order();
  QDL_ENSURE(total == order * order, ErrorCode::DimensionMismatch,
             "sum of squared dimensions " + std::to_string(total) + " != |G|^2");
}

const Cyclo& DoubleData::chi(int i, Elem g) const {
  const SimpleObject& s = simples_[i];
  const int local = centralizers_[s.cls].from_parent[g];
  QDL_ENSURE(local >= 0, ErrorCode::Internal, "character evaluated outside the centralizer");
  return tables_[s.cls].values[s.char_index][local];
}

int DoubleData::chi_root(int i, Elem g) const {
  const SimpleObject& s = simples_[i];
  const int local = centralizers_[s.cls].from_parent[g];
  QDL_ENSURE(local >= 0, ErrorCode::Internal, "character evaluated outside the centralizer");
  return roots_[i][local];
}

bool DoubleData::classes_commute(int ca, int cb) const { return class_commute_[ca][cb]; }

namespace {

// Exponent of the beta prefactor in the twisted centralizer criterion.
long prefactor(const DoubleData& d, Elem a, Elem b, Elem x, Elem y) {
  const FiniteGroup& g = d.group();
  const Elem xi = g.inv(x), yi = g.inv(y);
  const Elem byy = g.mul(g.mul(yi, b), y);  // y^-1 b y
  const Elem axx = g.mul(g.mul(xi, a), x);  // x^-1 a x
  return d.beta_n(a, x, byy) + d.beta_n(a, g.mul(x, byy), xi) + d.beta_n(b, y, axx) + d.beta_n(b, g.mul(y, axx), yi) -
         d.beta_n(a, x, xi) - d.beta_n(b, y, yi);
}

}  // namespace

bool DoubleData::centralize(int i, int j) const {
  const SimpleObject& s1 = simples_[i];
  const SimpleObject& s2 = simples_[j];
  if (!classes_commute(s1.cls, s2.cls)) return false;
  const FiniteGroup& g = group();
  const long n = ctx_->order();
  const Elem a = s1.rep, b = s2.rep;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem xyi = g.mul(x, g.inv(y)), yxi = g.mul(y, g.inv(x));
      const int r1 = chi_root(i, g.conj(xyi, b));
      if (r1 < 0) return false;
      const int r2 = chi_root(j, g.conj(yxi, a));
      if (r2 < 0) return false;
      if (((prefactor(*this, a, b, x, y) + r1 + r2) % n + n) % n != 0) return false;
    }
  return true;
}

bool DoubleData::centralize_literal(int i, int j) const {
  const SimpleObject& s1 = simples_[i];
  const SimpleObject& s2 = simples_[j];
  if (!classes_commute(s1.cls, s2.cls)) return false;
  const FiniteGroup& g = group();
  const Elem a = s1.rep, b = s2.rep;
  const Cyclo target = ctx_->rational(static_cast<long>(s1.degree) * s2.degree);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem xyi = g.mul(x, g.inv(y)), yxi = g.mul(y, g.inv(x));
      const Cyclo lhs = ctx_->root(prefactor(*this, a, b, x, y)) * chi(i, g.conj(xyi, b)) * chi(j, g.conj(yxi, a));
      if (lhs != target) return false;
    }
  return true;
}

const ModularData& DoubleData::modular_data() const {
  if (twisted()) throw Error(ErrorCode::UnsupportedTriple, "S-matrix is only available for trivial omega");
  std::call_once(modular_->once, [this] {
    const FiniteGroup& g = group();
    const int n = size();
    const CycloContext& ctx = *ctx_;
    auto md = std::make_unique<ModularData>();
    md->size = n;
    md->s.assign(n, std::vector<Cyclo>(n, ctx.zero()));
    for (int i = 0; i < n; ++i) {
      const SimpleObject& x = simples_[i];
      for (int j = 0; j < n; ++j) {
        const SimpleObject& y = simples_[j];
        const Elem a = x.rep, b = y.rep;
        CycloAccumulator acc(ctx);
        for (Elem h = 0; h < g.order(); ++h) {
          const Elem hb = g.conj(h, b);
          if (!g.commute(a, hb)) continue;
          acc.add_product(chi(i, hb).conj(), chi(j, g.conj(g.inv(h), a)).conj());
        }
        const long ca = static_cast<long>(centralizers_[x.cls].group->order());
        const long cb = static_cast<long>(centralizers_[y.cls].group->order());
        md->s[i][j] = acc.result() * mpq_class(g.order(), ca * cb);
      }
      md->t.push_back(x.twist);
    }

    // Verlinde: N_ij^k = |G|^-2 sum_s S_is S_js conj(S_ks) / S_0s.
    const mpq_class norm(1, static_cast<long>(g.order()) * g.order());
    std::vector<std::vector<Cyclo>> right(n);  // conj(S_ks) / S_0s
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < n; ++s) right[k].push_back(md->s[k][s].conj() / md->s[0][s]);
    md->fusion.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<Cyclo> left;
        for (int s = 0; s < n; ++s) left.push_back(md->s[i][s] * md->s[j][s]);
        for (int k = 0; k < n; ++k) {
          CycloAccumulator acc(ctx);
          for (int s = 0; s < n; ++s) acc.add_product(left[s], right[k][s]);
          const Cyclo v = acc.result() * norm;
          if (!v.is_integer() || v.rational_value() < 0)
            throw Error(ErrorCode::VerlindeNonInteger,
                        "N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k) + " = " +
                            v.to_string());
          const int value = static_cast<int>(v.rational_value().get_num().get_si());
          md->fusion[(static_cast<std::size_t>(i) * n + j) * n + k] = value;
          md->fusion[(static_cast<std::size_t>(j) * n + i) * n + k] = value;
        }
      }
    md->dual.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (md->n(i, j, 0) == 1) {
          QDL_ENSURE(md->dual[i] < 0, ErrorCode::Internal, "object with two duals");
          md->dual[i] = j;
        }
    for (int i = 0; i < n; ++i) QDL_ENSURE(md->dual[i] >= 0, ErrorCode::Internal, "object without dual");
    modular_->data = std::move(md);
  });
  return *modular_->data;
}

bool DoubleData::magnitude_centralize(int i, int j) const {
  const auto& md = modular_data();
  const long dd = simples_[i].dim * simples_[j].dim;
  return md.s[i][j].norm_squared() == ctx_->rational(dd * dd);
}

Cyclo DoubleData::gauss_sum(const std::vector<int>& simples) const {
  Cyclo sum = ctx_->zero();
  for (int i : simples) sum += simples_[i].twist * mpq_class(simples_[i].dim * simples_[i].dim);
  return sum;
}

}  // namespace qdl
