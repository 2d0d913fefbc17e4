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

#include "linear_zn.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "error.hpp"

namespace qdl {

namespace {

using i64 = std::int64_t;

i64 reduce(i64 a, i64 n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// Returns g = gcd(a, b) and s, t with s a + t b = g (a, b >= 0, not both 0).
i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) {
  if (a != 0 && b % a == 0) {
    s = 1;
    t = 0;
    return a;
  }
  i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const i64 q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  s = s0;
  t = t0;
  return a;
}

i64 inverse_mod(i64 a, i64 n) {
  i64 s = 0, t = 0;
  const i64 g = ext_gcd(reduce(a, n), n, s, t);
  QDL_ENSURE(g == 1, ErrorCode::Internal, "non-invertible element in modular inverse");
  return reduce(s, n);
}

i64 valuation(i64 a, i64 n) { return std::gcd(a, n); }

}  // namespace

LinearSystemZn::LinearSystemZn(int modulus, int num_vars) : modulus_(modulus), num_vars_(num_vars) {
  if (modulus < 1 || num_vars < 0) throw Error(ErrorCode::InvalidArgument, "bad linear system shape");
}

void LinearSystemZn::add_equation(const std::vector<std::pair<int, long>>& coeffs, long rhs) {
  std::vector<i64> row(num_vars_, 0);
  for (const auto& [var, c] : coeffs) {
    if (var < 0 || var >= num_vars_) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    row[var] = reduce(row[var] + c, modulus_);
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(reduce(rhs, modulus_));
}

LinearSystemZn::Diagonal LinearSystemZn::diagonalize() const {
  const i64 n = modulus_;
  const int cols = num_vars_;
  auto a = rows_;
  auto c = rhs_;
  const int rows = static_cast<int>(a.size());
  Diagonal out;
  out.v.assign(cols, std::vector<i64>(cols, 0));
  for (int i = 0; i < cols; ++i) out.v[i][i] = 1;

  // Replace rows (r1, r2) by (s r1 + t r2, -y/g r1 + x/g r2), unimodular.
  auto row_combine = [&](int r1, int r2, i64 s, i64 t, i64 u, i64 w) {
    for (int j = 0; j < cols; ++j) {
      const i64 p = a[r1][j], q = a[r2][j];
      a[r1][j] = reduce(s * p + t * q, n);
      a[r2][j] = reduce(u * p + w * q, n);
    }
    const i64 p = c[r1], q = c[r2];
    c[r1] = reduce(s * p + t * q, n);
    c[r2] = reduce(u * p + w * q, n);
  };
  auto col_combine = [&](int c1, int c2, i64 s, i64 t, i64 u, i64 w) {
    for (int i = 0; i < rows; ++i) {
      const i64 p = a[i][c1], q = a[i][c2];
      a[i][c1] = reduce(s * p + t * q, n);
      a[i][c2] = reduce(u * p + w * q, n);
    }
    for (int i = 0; i < cols; ++i) {
      const i64 p = out.v[i][c1], q = out.v[i][c2];
      out.v[i][c1] = reduce(s * p + t * q, n);
      out.v[i][c2] = reduce(u * p + w * q, n);
    }
  };

  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    int bi = -1, bj = -1;
    i64 best = n;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && valuation(a[i][j], n) < best) {
          best = valuation(a[i][j], n);
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    std::swap(a[t], a[bi]);
    std::swap(c[t], c[bi]);
    if (bj != t) col_combine(t, bj, 0, 1, 1, 0);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        i64 s = 0, r = 0;
        const i64 x = a[t][t], y = a[i][t];
        const i64 g = ext_gcd(x, y, s, r);
        row_combine(t, i, s, r, -(y / g), x / g);
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        i64 s = 0, r = 0;
        const i64 x = a[t][t], y = a[t][j];
        const i64 g = ext_gcd(x, y, s, r);
        col_combine(t, j, s, r, -(y / g), x / g);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (int i = t + 1; i < rows && !dirty; ++i) dirty = a[i][t] != 0;
      }
    }
    out.d.push_back(a[t][t]);
    out.c.push_back(c[t]);
  }
  for (int i = t; i < rows; ++i)
    if (c[i] != 0) out.consistent = false;
  return out;
}

std::size_t LinearSystemZn::count_solutions() const {
  const Diagonal dg = diagonalize();
  if (!dg.consistent) return 0;
  const i64 n = modulus_;
  std::size_t total = 1;
  auto mul = [&](std::size_t f) {
    if (total > std::numeric_limits<std::size_t>::max() / f) total = std::numeric_limits<std::size_t>::max();
    else total *= f;
  };
  for (std::size_t t = 0; t < dg.d.size(); ++t) {
    const i64 g = std::gcd(dg.d[t], n);
    if (dg.c[t] % g != 0) return 0;
    mul(static_cast<std::size_t>(g));
  }
  for (int t = static_cast<int>(dg.d.size()); t < num_vars_; ++t) mul(static_cast<std::size_t>(n));
  return total;
}

std::vector<std::vector<int>> LinearSystemZn::solve_all(std::size_t cap) const {
  const std::size_t count = count_solutions();
  if (count == 0) return {};
  if (count > cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(count) + " solutions exceed cap " + std::to_string(cap));
  const Diagonal dg = diagonalize();
  const i64 n = modulus_;
  const int rank = static_cast<int>(dg.d.size());

  // Per diagonal coordinate: particular value and step, with multiplicity.
  std::vector<i64> base(num_vars_, 0), step(num_vars_, 1), choices(num_vars_, n);
  for (int t = 0; t < rank; ++t) {
    const i64 g = std::gcd(dg.d[t], n);
    const i64 ng = n / g;
    base[t] = ng == 1 ? 0 : reduce((dg.c[t] / g) * inverse_mod(dg.d[t] / g, ng), ng);
    step[t] = ng;
    choices[t] = g;
  }

  std::set<std::vector<int>> found;
  std::vector<i64> k(num_vars_, 0);
  while (true) {
    std::vector<int> x(num_vars_, 0);
    for (int i = 0; i < num_vars_; ++i) {
      i64 acc = 0;
      for (int j = 0; j < num_vars_; ++j) acc = reduce(acc + dg.v[i][j] * reduce(base[j] + k[j] * step[j], n), n);
      x[i] = static_cast<int>(acc);
    }
    found.insert(std::move(x));
    int pos = 0;
    while (pos < num_vars_ && ++k[pos] == choices[pos]) k[pos++] = 0;
    if (pos == num_vars_) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace qdl
