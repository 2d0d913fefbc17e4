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

#include "cyclotomic.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "error.hpp"

namespace qdl {

namespace {

using Poly = std::vector<mpz_class>;

// Exact quotient of a by a monic divisor b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    QDL_ENSURE(a[i] == 0, ErrorCode::Internal, "cyclotomic division left a remainder");
  return q;
}

Poly cyclotomic(int n, std::map<int, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic(d, memo));
  memo[n] = p;
  return p;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- context

const CycloContext& CycloContext::get(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[n];
  if (!slot) slot.reset(new CycloContext(n));
  return *slot;
}

CycloContext::CycloContext(int n) : n_(n) {
  std::map<int, Poly> memo;
  phi_ = cyclotomic(n, memo);
  const int d = degree();
  roots_.reserve(n);
  Poly power(d, 0);
  power[0] = 1;
  for (int k = 0; k < n; ++k) {
    Cyclo z(*this);
    z.num_ = power;
    z.normalize();
    roots_.push_back(z);

    std::vector<long> key;
    bool fits = true;
    for (const auto& c : power) {
      fits = fits && c.fits_slong_p();
      key.push_back(fits ? c.get_si() : 0);
    }
    if (fits) root_lookup_.emplace(std::move(key), k);

    Poly next(d + 1, 0);
    for (int i = 0; i < d; ++i) next[i + 1] = power[i];
    reduce(next);
    power = std::move(next);
  }
}

void CycloContext::reduce(std::vector<mpz_class>& poly) const {
  const std::size_t d = static_cast<std::size_t>(degree());
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    const mpz_class c = poly[i];
    for (std::size_t j = 0; j < d; ++j) poly[i - d + j] -= c * phi_[j];
    poly[i] = 0;
  }
  poly.resize(d);
}

Cyclo CycloContext::zero() const { return Cyclo(*this); }

Cyclo CycloContext::one() const { return roots_[0]; }

Cyclo CycloContext::rational(const mpq_class& q) const {
  Cyclo z(*this);
  z.num_[0] = q.get_num();
  z.den_ = q.get_den();
  z.normalize();
  return z;
}

const Cyclo& CycloContext::root(long k) const {
  long r = k % n_;
  if (r < 0) r += n_;
  return roots_[static_cast<std::size_t>(r)];
}

std::optional<int> CycloContext::root_exponent(const Cyclo& z) const {
  if (z.den_ != 1) return std::nullopt;
  std::vector<long> key;
  key.reserve(z.num_.size());
  for (const auto& c : z.num_) {
    if (!c.fits_slong_p()) return std::nullopt;
    key.push_back(c.get_si());
  }
  auto it = root_lookup_.find(key);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- values

Cyclo::Cyclo(const CycloContext& ctx) : ctx_(&ctx), num_(ctx.degree(), 0), den_(1) {}

void Cyclo::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

mpq_class Cyclo::coeff(int i) const {
  mpq_class q(num_[i], den_);
  q.canonicalize();
  return q;
}

bool Cyclo::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

mpq_class Cyclo::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "element is not rational: " + to_string());
  return coeff(0);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  const std::size_t d = a.num_.size();
  std::vector<mpz_class> raw(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.num_[j] != 0) mpz_addmul(raw[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  a.ctx_->reduce(raw);
  Cyclo r(*a.ctx_);
  r.num_ = std::move(raw);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) { return *this = *this * o; }

Cyclo& Cyclo::operator*=(const mpq_class& q) {
  for (auto& c : num_) c *= q.get_num();
  den_ *= q.get_den();
  normalize();
  return *this;
}

Cyclo Cyclo::conj() const {
  Cyclo r(*ctx_);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const Cyclo& w = ctx_->root(-static_cast<long>(k));
    for (std::size_t i = 0; i < num_.size(); ++i)
      if (w.num_[i] != 0) mpz_addmul(r.num_[i].get_mpz_t(), num_[k].get_mpz_t(), w.num_[i].get_mpz_t());
  }
  r.den_ = den_;
  r.normalize();
  return r;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(ctx_->order()) + ")");
  if (is_rational()) return ctx_->rational(1 / coeff(0));

  // Solve (z * y) = 1 for y: column j of M is z * x^j.
  const int d = ctx_->degree();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (int j = 0; j < d; ++j) {
    const Cyclo col = *this * ctx_->root(j);
    for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (p < d && m[p][c] == 0) ++p;
    QDL_ENSURE(p < d, ErrorCode::Internal, "singular multiplication matrix");
    std::swap(m[p], m[c]);
    const mpq_class pivot = m[c][c];
    for (int k = c; k <= d; ++k) m[c][k] /= pivot;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Cyclo y(*ctx_);
  mpz_class den = 1;
  for (int i = 0; i < d; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[i][d].get_den_mpz_t());
  for (int i = 0; i < d; ++i) y.num_[i] = m[i][d].get_num() * (den / m[i][d].get_den());
  y.den_ = den;
  y.normalize();
  return y;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
  if (o.is_rational()) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return *this *= 1 / o.coeff(0);
  }
  return *this *= o.inv();
}

bool operator==(const Cyclo& a, const Cyclo& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

bool operator<(const Cyclo& a, const Cyclo& b) {
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

std::complex<double> Cyclo::to_complex() const {
  const long double n = ctx_->order();
  const long double den = den_.get_d();
  long double re = 0, im = 0;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    const long double c = num_[k].get_d() / den;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    const mpq_class c = coeff(static_cast<int>(k));
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpq_class mag = abs(c);
    if (k == 0) {
      os << rational_string(mag);
    } else {
      if (mag != 1) os << rational_string(mag) << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- accumulator

CycloAccumulator::CycloAccumulator(const CycloContext& ctx)
    : ctx_(&ctx), raw_(2 * static_cast<std::size_t>(ctx.degree()) - 1, 0) {}

void CycloAccumulator::add_product(const Cyclo& a, const Cyclo& b) {
  if (a.den_ != 1 || b.den_ != 1) {
    Cyclo p = a * b;
    rest_ = rest_ ? *rest_ + p : p;
    return;
  }
  const std::size_t d = a.num_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.num_[j] != 0) mpz_addmul(raw_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
}

void CycloAccumulator::add(const Cyclo& a) {
  if (a.den_ != 1) {
    rest_ = rest_ ? *rest_ + a : a;
    return;
  }
  for (std::size_t i = 0; i < a.num_.size(); ++i) raw_[i] += a.num_[i];
}

Cyclo CycloAccumulator::result() const {
  std::vector<mpz_class> raw = raw_;
  ctx_->reduce(raw);
  Cyclo r(*ctx_);
  r.num_ = std::move(raw);
  r.normalize();
  return rest_ ? r + *rest_ : r;
}

}  // namespace qdl
