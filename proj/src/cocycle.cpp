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

#include "cocycle.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace qdl {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

ThreeCocycle::ThreeCocycle(GroupPtr g, int modulus, std::vector<int> dlog)
    : group_(std::move(g)), modulus_(modulus), dlog_(std::move(dlog)) {
  if (modulus_ < 1) throw Error(ErrorCode::InvalidArgument, "cocycle modulus must be positive");
  bool zero = true;
  for (auto& v : dlog_) {
    v = mod(v);
    zero = zero && v == 0;
  }
  if (zero) dlog_.clear();
}

ThreeCocycle ThreeCocycle::trivial(GroupPtr g) { return ThreeCocycle(std::move(g), 1, {}); }

ThreeCocycle ThreeCocycle::from_table(GroupPtr g, int modulus, std::vector<int> dlog) {
  const std::size_t n = static_cast<std::size_t>(g->order());
  if (dlog.size() != n * n * n)
    throw Error(ErrorCode::InvalidArgument,
                "cocycle table has " + std::to_string(dlog.size()) + " entries, expected " + std::to_string(n * n * n));
  return ThreeCocycle(std::move(g), modulus, std::move(dlog));
}

ThreeCocycle ThreeCocycle::builtin_cyclic(GroupPtr g, int n, int q) {
  if (n < 1 || q < 0 || q >= n) throw Error(ErrorCode::InvalidArgument, "cyclic cocycle needs 0 <= q < n");
  if (g->order() != n) throw Error(ErrorCode::InvalidArgument, "cyclic cocycle order does not match the group");
  Elem gen = -1;
  for (Elem x = 0; x < n && gen < 0; ++x)
    if (g->element_order(x) == n) gen = x;
  if (gen < 0) throw Error(ErrorCode::InvalidArgument, "group " + g->name() + " is not cyclic");
  std::vector<int> log(n);
  Elem p = 0;
  for (int k = 0; k < n; ++k) {
    log[p] = k;
    p = g->mul(p, gen);
  }
  std::vector<int> dlog(static_cast<std::size_t>(n) * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        dlog[(static_cast<std::size_t>(a) * n + b) * n + c] = q * log[a] * ((log[b] + log[c]) / n);
  return ThreeCocycle(std::move(g), n, std::move(dlog));
}

ThreeCocycle ThreeCocycle::coboundary(GroupPtr g, int modulus, const std::vector<int>& mu) {
  const std::size_t n = static_cast<std::size_t>(g->order());
  if (mu.size() != n * n) throw Error(ErrorCode::InvalidArgument, "2-cochain table has wrong size");
  for (std::size_t x = 0; x < n; ++x)
    if (mu[x] % modulus != 0 || mu[x * n] % modulus != 0)
      throw Error(ErrorCode::NotNormalized, "2-cochain is not normalized at " + std::to_string(x));
  auto m = [&](Elem x, Elem y) { return mu[static_cast<std::size_t>(x) * n + y]; };
  std::vector<int> dlog(n * n * n);
  for (Elem x = 0; x < static_cast<int>(n); ++x)
    for (Elem y = 0; y < static_cast<int>(n); ++y)
      for (Elem z = 0; z < static_cast<int>(n); ++z)
        dlog[(x * n + y) * n + z] = m(y, z) - m(g->mul(x, y), z) + m(x, g->mul(y, z)) - m(x, y);
  return ThreeCocycle(std::move(g), modulus, std::move(dlog));
}

ThreeCocycle ThreeCocycle::pullback(GroupPtr source, const std::vector<Elem>& hom) const {
  const std::size_t n = static_cast<std::size_t>(source->order());
  if (hom.size() != n) throw Error(ErrorCode::InvalidArgument, "homomorphism has wrong length");
  for (Elem x = 0; x < static_cast<int>(n); ++x)
    for (Elem y = 0; y < static_cast<int>(n); ++y)
      if (hom[source->mul(x, y)] != group_->mul(hom[x], hom[y]))
        throw Error(ErrorCode::InvalidArgument, "map is not a homomorphism");
  if (dlog_.empty()) return trivial(std::move(source));
  std::vector<int> dlog(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) dlog[(x * n + y) * n + z] = (*this)(hom[x], hom[y], hom[z]);
  return ThreeCocycle(std::move(source), modulus_, std::move(dlog));
}

ThreeCocycle ThreeCocycle::product(const ThreeCocycle& other) const {
  if (group_->order() != other.group_->order())
    throw Error(ErrorCode::InvalidArgument, "cocycles live on different groups");
  const int m = std::lcm(modulus_, other.modulus_);
  const int s1 = m / modulus_, s2 = m / other.modulus_;
  const std::vector<int> a = table(), b = other.table();
  std::vector<int> dlog(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) dlog[i] = a[i] * s1 + b[i] * s2;
  return ThreeCocycle(group_, m, std::move(dlog));
}

bool ThreeCocycle::is_trivial() const { return dlog_.empty(); }

std::vector<int> ThreeCocycle::table() const {
  const std::size_t n = static_cast<std::size_t>(group_->order());
  if (dlog_.empty()) return std::vector<int>(n * n * n, 0);
  return dlog_;
}

int ThreeCocycle::beta(Elem a, Elem x, Elem y) const {
  if (dlog_.empty()) return 0;
  const FiniteGroup& g = *group_;
  const Elem xax = g.mul(g.mul(g.inv(x), a), x);
  const Elem xy = g.mul(x, y);
  const Elem t = g.mul(g.mul(g.inv(xy), a), xy);
  return mod(static_cast<long>((*this)(a, x, y)) + (*this)(x, y, t) - (*this)(x, xax, y));
}

int ThreeCocycle::eta(Elem a, Elem x, Elem y) const {
  if (dlog_.empty()) return 0;
  const FiniteGroup& g = *group_;
  const Elem xy = g.mul(x, y);
  return mod(static_cast<long>((*this)(x, y, a)) + (*this)(g.conj(xy, a), x, y) - (*this)(x, g.conj(y, a), y));
}

int ThreeCocycle::gamma(Elem a, Elem x, Elem y) const {
  if (dlog_.empty()) return 0;
  const FiniteGroup& g = *group_;
  const Elem ai = g.inv(a);
  return mod(static_cast<long>((*this)(x, y, a)) + (*this)(a, g.conj(ai, x), g.conj(ai, y)) -
             (*this)(x, a, g.conj(ai, y)));
}

int ThreeCocycle::nu(Elem a, Elem x, Elem y) const {
  if (dlog_.empty()) return 0;
  const FiniteGroup& g = *group_;
  const Elem axa = g.conj(a, x);
  return mod(static_cast<long>((*this)(axa, g.conj(a, y), a)) + (*this)(a, x, y) - (*this)(axa, a, y));
}

std::vector<IdentityCheck> ThreeCocycle::validation_checks() const {
  const FiniteGroup& g = *group_;
  const int n = g.order();
  IdentityCheck norm{"normalized", true, ""};
  for (Elem x = 0; x < n && norm.passed; ++x)
    for (Elem y = 0; y < n && norm.passed; ++y)
      if ((*this)(x, 0, y) != 0) {
        norm.passed = false;
        norm.witness = tuple_str({x, y});
      }
  IdentityCheck cond{"cocycle-condition", true, ""};
  if (!dlog_.empty()) {
    for (Elem a = 0; a < n && cond.passed; ++a)
      for (Elem b = 0; b < n && cond.passed; ++b)
        for (Elem c = 0; c < n && cond.passed; ++c)
          for (Elem d = 0; d < n && cond.passed; ++d) {
            const long lhs = static_cast<long>((*this)(b, c, d)) + (*this)(a, g.mul(b, c), d) + (*this)(a, b, c);
            const long rhs = static_cast<long>((*this)(g.mul(a, b), c, d)) + (*this)(a, b, g.mul(c, d));
            if (mod(lhs - rhs) != 0) {
              cond.passed = false;
              cond.witness = tuple_str({a, b, c, d});
            }
          }
  }
  return {norm, cond};
}

void ThreeCocycle::validate() const {
  const auto checks = validation_checks();
  if (!checks[0].passed) throw Error(ErrorCode::NotNormalized, "omega(g,e,l) != 1 at (g,l) = " + checks[0].witness);
  if (!checks[1].passed) throw Error(ErrorCode::NotACocycle, "3-cocycle condition fails at " + checks[1].witness);
}

std::vector<IdentityCheck> ThreeCocycle::identity_checks() const {
  const FiniteGroup& g = *group_;
  const int n = g.order();
  std::vector<IdentityCheck> out;

  // Runs pred over a 4-deep loop and records the first failing tuple.
  auto exhaustive4 = [&](const std::string& name, const std::function<bool(Elem, Elem, Elem, Elem)>& ok) {
    IdentityCheck c{name, true, ""};
    for (Elem p = 0; p < n && c.passed; ++p)
      for (Elem q = 0; q < n && c.passed; ++q)
        for (Elem r = 0; r < n && c.passed; ++r)
          for (Elem s = 0; s < n && c.passed; ++s)
            if (!ok(p, q, r, s)) {
              c.passed = false;
              c.witness = tuple_str({p, q, r, s});
            }
    out.push_back(c);
  };

  exhaustive4("beta-relation", [&](Elem a, Elem x, Elem y, Elem z) {
    const Elem xax = g.mul(g.mul(g.inv(x), a), x);
    return mod(static_cast<long>(beta(a, x, y)) + beta(a, g.mul(x, y), z) - beta(a, x, g.mul(y, z)) -
               beta(xax, y, z)) == 0;
  });

  {
    IdentityCheck c{"centralizer-agreement", true, ""};
    for (Elem a = 0; a < n && c.passed; ++a)
      for (Elem x = 0; x < n && c.passed; ++x) {
        if (!g.commute(a, x)) continue;
        for (Elem y = 0; y < n && c.passed; ++y) {
          if (!g.commute(a, y)) continue;
          const int b = beta(a, x, y);
          if (eta(a, x, y) != b || gamma(a, x, y) != b || nu(a, x, y) != b) {
            c.passed = false;
            c.witness = tuple_str({a, x, y});
          }
        }
      }
    out.push_back(c);
  }

  exhaustive4("gamma-beta-relation", [&](Elem a, Elem b, Elem x, Elem y) {
    const Elem ai = g.inv(a);
    const long lhs = static_cast<long>(gamma(g.mul(a, b), x, y)) - gamma(b, g.conj(ai, x), g.conj(ai, y)) - gamma(a, x, y);
    const long rhs = static_cast<long>(beta(x, a, b)) + beta(y, a, b) - beta(g.mul(x, y), a, b);
    return mod(lhs - rhs) == 0;
  });

  exhaustive4("nu-eta-relation", [&](Elem a, Elem b, Elem x, Elem y) {
    const long lhs = static_cast<long>(nu(g.mul(a, b), x, y)) - nu(a, g.conj(b, x), g.conj(b, y)) - nu(b, x, y);
    const long rhs = static_cast<long>(eta(x, a, b)) + eta(y, a, b) - eta(g.mul(x, y), a, b);
    return mod(lhs - rhs) == 0;
  });

  // Commuting pairs (h, k) and arbitrary x.
  auto commuting3 = [&](const std::string& name, const std::function<bool(Elem, Elem, Elem)>& ok) {
    IdentityCheck c{name, true, ""};
    for (Elem h = 0; h < n && c.passed; ++h)
      for (Elem k = 0; k < n && c.passed; ++k) {
        if (!g.commute(h, k)) continue;
        for (Elem x = 0; x < n && c.passed; ++x)
          if (!ok(x, h, k)) {
            c.passed = false;
            c.witness = tuple_str({x, h, k});
          }
      }
    out.push_back(c);
  };

  commuting3("nu-beta-i", [&](Elem x, Elem h, Elem k) {
    const Elem xi = g.inv(x);
    const Elem c = g.conj(x, h);
    const long lhs = static_cast<long>(nu(x, h, k)) - nu(x, k, h);
    const long rhs = static_cast<long>(beta(c, x, xi)) - beta(c, x, k) - beta(c, g.mul(x, k), xi);
    return mod(lhs - rhs) == 0;
  });
  commuting3("nu-beta-ii", [&](Elem x, Elem h, Elem k) {
    const Elem xi = g.inv(x);
    const Elem hh = g.conj(xi, h), kk = g.conj(xi, k);
    const long lhs = static_cast<long>(nu(x, hh, kk)) - nu(x, kk, hh);
    const long rhs = static_cast<long>(nu(xi, k, h)) - nu(xi, h, k);
    return mod(lhs - rhs) == 0;
  });
  // Part (iii) is derived from (i) applied to (y^-1, yky^-1, h), so h must
  // also commute with yky^-1; outside that set the identity can fail.
  commuting3("nu-beta-iii", [&](Elem y, Elem h, Elem k) {
    const Elem yi = g.inv(y);
    if (!g.commute(h, g.conj(y, k))) return true;
    const long lhs = static_cast<long>(beta(k, yi, y)) - beta(k, yi, h) - beta(k, g.mul(yi, h), y);
    const long rhs = static_cast<long>(beta(h, y, yi)) - beta(h, y, k) - beta(h, g.mul(y, k), yi);
    return mod(lhs - rhs) == 0;
  });
  return out;
}

void ThreeCocycle::check_identities() const {
  for (const auto& c : identity_checks())
    if (!c.passed) throw Error(ErrorCode::IdentityViolation, c.name + " fails at " + c.witness);
}

}  // namespace qdl
