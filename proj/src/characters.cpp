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

#include "characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "error.hpp"
#include "linear_zn.hpp"

namespace qdl {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const {
    QDL_ENSURE(a % p != 0, ErrorCode::Internal, "inverse of zero mod p");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 choose_prime(u64 n_field, u64 order) {
  const double bound = 2.0 * std::pow(static_cast<double>(order), 1.5);
  for (u64 p = n_field + 1;; p += n_field)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 r = f.p - 1;
  for (u64 d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      factors.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) factors.push_back(r);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok) return g;
  }
}

using Mat = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& rows, const Fp& f) {
  std::vector<int> pivots;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 t = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Characteristic polynomial (low degree first) via Hessenberg reduction.
std::vector<u64> charpoly(Mat h, const Fp& f) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m < n - 1; ++m) {
    int i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 inv = f.inv(h[m][m - 1]);
    for (int r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      const u64 t = f.mul(h[r][m - 1], inv);
      for (int c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(t, h[m][c]));
      for (int c = 0; c < n; ++c) h[c][m] = f.add(h[c][m], f.mul(t, h[c][r]));
    }
  }
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    for (int i = 0; i < k; ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    u64 t = 1;
    for (int i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      const u64 coef = f.mul(t, h[k - i - 1][k - 1]);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) cur[j] = f.sub(cur[j], f.mul(coef, p[k - i - 1][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// Null space basis of a square matrix.
Mat nullspace(Mat a, const Fp& f) {
  const int n = static_cast<int>(a.size());
  const auto pivots = rref(a, f);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat out;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

struct ClassAlgebra {
  int k = 0;
  std::vector<std::vector<std::vector<u64>>> c;  // c[j][i][l]
};

ClassAlgebra class_algebra(const FiniteGroup& g) {
  ClassAlgebra a;
  a.k = g.num_classes();
  a.c.assign(a.k, std::vector<std::vector<u64>>(a.k, std::vector<u64>(a.k, 0)));
  for (int j = 0; j < a.k; ++j)
    for (int i = 0; i < a.k; ++i) {
      for (Elem x : g.class_members(j))
        for (Elem y : g.class_members(i)) ++a.c[j][i][g.class_of(g.mul(x, y))];
      for (int l = 0; l < a.k; ++l) a.c[j][i][l] /= g.class_size(l);
    }
  return a;
}

// Splits F_p^k into the common eigenlines of the class matrices.
std::vector<std::vector<u64>> common_eigenvectors(const ClassAlgebra& alg, const Fp& f) {
  const int k = alg.k;
  Mat full(k, std::vector<u64>(k, 0));
  for (int i = 0; i < k; ++i) full[i][i] = 1;
  std::vector<Mat> spaces{full};
  for (int j = 1; j < k; ++j) {
    std::vector<Mat> next;
    for (auto& w : spaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const auto pivots = rref(w, f);
      const int d = static_cast<int>(w.size());
      // Image of basis vector b under M_j, in the basis of w.
      Mat r(d, std::vector<u64>(d, 0));
      for (int b = 0; b < d; ++b) {
        std::vector<u64> img(k, 0);
        for (int i = 0; i < k; ++i)
          for (int l = 0; l < k; ++l)
            if (alg.c[j][i][l] != 0 && w[b][l] != 0) img[i] = f.add(img[i], f.mul(alg.c[j][i][l] % f.p, w[b][l]));
        for (int a = 0; a < d; ++a) r[a][b] = img[pivots[a]];
      }
      const auto poly = charpoly(r, f);
      std::vector<u64> roots;
      for (u64 x = 0; x < f.p; ++x) {
        u64 acc = 0;
        for (std::size_t t = poly.size(); t-- > 0;) acc = f.add(f.mul(acc, x), poly[t]);
        if (acc == 0) roots.push_back(x);
      }
      QDL_ENSURE(!roots.empty(), ErrorCode::LiftFailure, "class matrix has no eigenvalue mod p");
      if (roots.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      for (u64 lambda : roots) {
        Mat shifted = r;
        for (int a = 0; a < d; ++a) shifted[a][a] = f.sub(shifted[a][a], lambda);
        Mat sub;
        for (const auto& y : nullspace(shifted, f)) {
          std::vector<u64> v(k, 0);
          for (int a = 0; a < d; ++a)
            for (int l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(y[a], w[a][l]));
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> out;
  for (auto& w : spaces) {
    QDL_ENSURE(w.size() == 1, ErrorCode::LiftFailure, "class algebra did not split into lines");
    out.push_back(w[0]);
  }
  QDL_ENSURE(static_cast<int>(out.size()) == k, ErrorCode::LiftFailure, "wrong number of characters");
  return out;
}

bool lex_less(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CharacterTable ordinary_table(GroupPtr group, const CycloContext& ctx) {
  const FiniteGroup& g = *group;
  const int n_field = ctx.order();
  if (n_field % g.exponent() != 0)
    throw Error(ErrorCode::InvalidArgument, "field order " + std::to_string(n_field) + " is not a multiple of exponent " +
                                                std::to_string(g.exponent()));
  const Fp f{choose_prime(static_cast<u64>(n_field), static_cast<u64>(g.order()))};
  const u64 z = f.pow(primitive_root(f), (f.p - 1) / n_field);  // image of zeta_N
  const int k = g.num_classes();
  const ClassAlgebra alg = class_algebra(g);
  auto vecs = common_eigenvectors(alg, f);

  std::vector<int> inverse_class(k);
  for (int c = 0; c < k; ++c) inverse_class[c] = g.class_of(g.inv(g.class_reps()[c]));

  CharacterTable table;
  table.group = group;
  std::vector<std::pair<int, std::vector<Cyclo>>> rows;
  for (auto& v : vecs) {
    QDL_ENSURE(v[0] != 0, ErrorCode::LiftFailure, "eigenvector vanishes at the identity class");
    const u64 s = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, s);
    u64 denom = 0;
    for (int c = 0; c < k; ++c) denom = f.add(denom, f.mul(f.mul(v[c], v[inverse_class[c]]), f.inv(g.class_size(c))));
    const u64 deg_sq = f.mul(g.order() % f.p, f.inv(denom));
    int deg = 0;
    for (int d = 1; d * d <= g.order(); ++d)
      if (static_cast<u64>(d * d) % f.p == deg_sq) deg = d;
    if (deg == 0) throw Error(ErrorCode::LiftFailure, "no integer degree matches " + std::to_string(deg_sq));

    std::vector<u64> modp(k);
    for (int c = 0; c < k; ++c) modp[c] = f.mul(f.mul(deg, v[c]), f.inv(g.class_size(c)));

    std::vector<Cyclo> vals;
    for (int c = 0; c < k; ++c) {
      const Elem x = g.class_reps()[c];
      const int o = g.element_order(x);
      const u64 zo = f.pow(z, n_field / o);
      Cyclo value = ctx.zero();
      Elem power = 0;
      std::vector<u64> along(o);
      for (int e = 0; e < o; ++e) {
        along[e] = modp[g.class_of(power)];
        power = g.mul(power, x);
      }
      const u64 inv_o = f.inv(o);
      for (int t = 0; t < o; ++t) {
        u64 m = 0;
        for (int e = 0; e < o; ++e)
          m = f.add(m, f.mul(along[e], f.pow(zo, static_cast<u64>((o - (static_cast<long>(e) * t) % o) % o))));
        m = f.mul(m, inv_o);
        if (m > static_cast<u64>(deg))
          throw Error(ErrorCode::LiftFailure, "eigenvalue multiplicity " + std::to_string(m) + " exceeds degree");
        if (m != 0) value += ctx.root(static_cast<long>(t) * (n_field / o)) * mpq_class(static_cast<long>(m));
      }
      vals.push_back(std::move(value));
    }
    rows.emplace_back(deg, std::move(vals));
  }

  const auto principal = [&](const std::vector<Cyclo>& vals) {
    return std::all_of(vals.begin(), vals.end(), [&](const Cyclo& x) { return x == ctx.one(); });
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const bool pa = principal(a.second), pb = principal(b.second);
    if (pa != pb) return pa;
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  for (auto& [d, vals] : rows) {
    table.degrees.push_back(d);
    table.class_values.push_back(std::move(vals));
  }
  const auto report = check_orthogonality(table);
  if (!report.ok()) throw Error(ErrorCode::LiftFailure, "character table of " + g.name() + " fails orthogonality");
  return table;
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  const int k = g.num_classes();
  const CycloContext& ctx = t.class_values.at(0).at(0).context();
  OrthogonalityReport r;
  long sum = 0;
  for (int d : t.degrees) sum += static_cast<long>(d) * d;
  r.degrees = sum == g.order() && t.size() == k;
  if (t.size() != k) {
    r.rows = r.columns = false;
    return r;
  }
  std::vector<std::vector<Cyclo>> conj(k);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < k; ++c) conj[i].push_back(t.class_values[i][c].conj());
  for (int i = 0; i < k && r.rows; ++i)
    for (int j = i; j < k && r.rows; ++j) {
      CycloAccumulator acc(ctx);
      for (int c = 0; c < k; ++c)
        acc.add_product(t.class_values[i][c] * mpq_class(static_cast<long>(g.class_size(c))), conj[j][c]);
      r.rows = acc.result() == ctx.rational(i == j ? g.order() : 0);
    }
  for (int a = 0; a < k && r.columns; ++a)
    for (int b = a; b < k && r.columns; ++b) {
      CycloAccumulator acc(ctx);
      for (int i = 0; i < k; ++i) acc.add_product(t.class_values[i][a], conj[i][b]);
      const long expect = a == b ? static_cast<long>(g.order() / g.class_size(a)) : 0;
      r.columns = acc.result() == ctx.rational(expect);
    }
  return r;
}

CentralExtension central_extension(GroupPtr base, int m, const std::vector<int>& beta) {
  const int n = base->order();
  if (beta.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorCode::InvalidArgument, "2-cocycle table has wrong size");
  int g = m;
  for (int v : beta) g = std::gcd(g, ((v % m) + m) % m);
  CentralExtension ext;
  ext.base = base;
  ext.modulus = m / g;
  if (ext.modulus == 1) {
    ext.ext = base;
    return ext;
  }
  const int mp = ext.modulus;
  const int size = n * mp;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < mp; ++i)
      for (int y = 0; y < n; ++y)
        for (int j = 0; j < mp; ++j) {
          const int b = (((beta[static_cast<std::size_t>(x) * n + y] % m) + m) % m) / g;
          table[x * mp + i][y * mp + j] = base->mul(x, y) * mp + (i + j + b) % mp;
        }
  ext.ext = std::make_shared<const FiniteGroup>(FiniteGroup::from_mult_table(
      std::move(table), base->name() + "~" + std::to_string(mp), static_cast<std::size_t>(size)));
  return ext;
}

ProjCharTable projective_table(GroupPtr group, int m, std::vector<int> beta, const CycloContext& ctx) {
  ProjCharTable t;
  t.group = group;
  t.modulus = m;
  t.beta = std::move(beta);
  t.extension = central_extension(group, m, t.beta);
  t.extension_table = ordinary_table(t.extension.ext, ctx);
  const int mp = t.extension.modulus;
  const Elem z = t.extension.central_generator();
  const Cyclo& zeta = ctx.root(ctx.order() / mp);
  const int n = group->order();
  for (int i = 0; i < t.extension_table.size(); ++i) {
    const int deg = t.extension_table.degrees[i];
    if (t.extension_table.value(i, z) != zeta * mpq_class(deg)) continue;
    std::vector<Cyclo> vals;
    vals.reserve(n);
    for (Elem x = 0; x < n; ++x) vals.push_back(t.extension_table.value(i, x * mp));
    t.degrees.push_back(deg);
    t.values.push_back(std::move(vals));
  }
  const auto report = check_projective(t);
  if (!report.ok())
    throw Error(ErrorCode::LiftFailure, "projective table of " + group->name() + " fails orthogonality");
  return t;
}

ProjectiveReport check_projective(const ProjCharTable& t) {
  ProjectiveReport r;
  const int n = t.group->order();
  long sum = 0;
  for (int d : t.degrees) sum += static_cast<long>(d) * d;
  r.degrees = sum == n;
  if (t.values.empty()) {
    r.rows = r.unit_values = false;
    return r;
  }
  const CycloContext& ctx = t.values[0][0].context();
  for (int i = 0; i < t.size(); ++i) r.unit_values = r.unit_values && t.values[i][0] == ctx.rational(t.degrees[i]);
  for (int i = 0; i < t.size() && r.rows; ++i)
    for (int j = i; j < t.size() && r.rows; ++j) {
      CycloAccumulator acc(ctx);
      for (Elem x = 0; x < n; ++x) acc.add_product(t.values[i][x], t.values[j][x].conj());
      r.rows = acc.result() == ctx.rational(i == j ? n : 0);
    }
  r.extension_columns = check_orthogonality(t.extension_table).columns;
  return r;
}

std::vector<std::vector<int>> degree_one_characters(const FiniteGroup& group, int m, const std::vector<int>& beta,
                                                    const Subgroup& sub, int n, std::size_t cap) {
  if (n % m != 0) throw Error(ErrorCode::InvalidArgument, "field order must be a multiple of the cocycle modulus");
  const long scale = n / m;
  const int order = group.order();
  LinearSystemZn sys(n, static_cast<int>(sub.size()));
  for (Elem h1 : sub.elements())
    for (Elem h2 : sub.elements()) {
      const int b = beta.empty() ? 0 : beta[static_cast<std::size_t>(h1) * order + h2];
      sys.add_equation({{sub.position(h1), 1}, {sub.position(h2), 1}, {sub.position(group.mul(h1, h2)), -1}},
                       scale * b);
    }
  return sys.solve_all(cap);
}

}  // namespace qdl
