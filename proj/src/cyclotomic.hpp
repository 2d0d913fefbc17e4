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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdl {

class Cyclo;

/// The field Q(zeta_N) presented as Q[x] / Phi_N(x). Contexts are interned
/// per N and live for the whole process.
class CycloContext {
 public:
  static const CycloContext& get(int n);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients of Phi_N, lowest degree first; monic.
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return phi_; }

  Cyclo zero() const;
  Cyclo one() const;
  Cyclo rational(const mpq_class& q) const;
  /// zeta_N^k for any integer k.
  const Cyclo& root(long k) const;
  /// k with z = zeta_N^k, if z is an N-th root of unity.
  std::optional<int> root_exponent(const Cyclo& z) const;

  CycloContext(const CycloContext&) = delete;
  CycloContext& operator=(const CycloContext&) = delete;

 private:
  explicit CycloContext(int n);
  friend class Cyclo;
  friend class CycloAccumulator;
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);

  void reduce(std::vector<mpz_class>& poly) const;

  int n_;
  std::vector<mpz_class> phi_;
  std::vector<Cyclo> roots_;
  std::map<std::vector<long>, int> root_lookup_;
};

/// Exact element of Q(zeta_N): integer numerators over one positive
/// denominator, reduced mod Phi_N, with gcd(numerators, den) = 1.
class Cyclo {
 public:
  explicit Cyclo(const CycloContext& ctx);

  const CycloContext& context() const { return *ctx_; }
  /// Coefficient of x^i as a rational.
  mpq_class coeff(int i) const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value of a rational element; throws InvalidArgument otherwise.
  mpq_class rational_value() const;
  bool is_integer() const { return is_rational() && den_ == 1; }

  Cyclo conj() const;
  Cyclo inv() const;
  Cyclo norm_squared() const { return *this * conj(); }
  std::complex<double> to_complex() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const mpq_class& q);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, const mpq_class& q) { return a *= q; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  /// Arbitrary but fixed total order (denominator, then numerators).
  friend bool operator<(const Cyclo& a, const Cyclo& b);

  std::string to_string() const;

 private:
  friend class CycloContext;
  friend class CycloAccumulator;
  void normalize();

  const CycloContext* ctx_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// Sums of products a_i * b_i with a single reduction at the end.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(const CycloContext& ctx);
  void add_product(const Cyclo& a, const Cyclo& b);
  void add(const Cyclo& a);
  Cyclo result() const;

 private:
  const CycloContext* ctx_;
  std::vector<mpz_class> raw_;  // integer part, unreduced
  std::optional<Cyclo> rest_;   // terms with nontrivial denominators
};

}  // namespace qdl
