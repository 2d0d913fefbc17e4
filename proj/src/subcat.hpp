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

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "double_data.hpp"

namespace qdl {

/// (K, H, B): normal subgroups centralizing each other and a G-invariant
/// omega-bicharacter B(k,h) = zeta_N^{b[pos_K(k) |H| + pos_H(h)]}.
struct Triple {
  Subgroup k;
  Subgroup h;
  int n = 1;
  std::vector<int> b;

  int value(Elem x, Elem y) const {
    return b[static_cast<std::size_t>(k.position(x)) * h.size() + static_cast<std::size_t>(h.position(y))];
  }
  bool b_trivial() const;

  friend bool operator==(const Triple& a, const Triple& c) { return a.k == c.k && a.h == c.h && a.b == c.b; }
  friend bool operator!=(const Triple& a, const Triple& c) { return !(a == c); }
  /// (|K|, K, |H|, H, B table).
  friend bool operator<(const Triple& a, const Triple& c);
};

struct Classification {
  bool symmetric = false;
  bool isotropic = false;
  bool lagrangian = false;
  bool nondegenerate = false;
};

/// Tally of the projective-character counting identity.
struct CountingStats {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct Lattice {
  std::vector<Triple> nodes;
  std::vector<std::pair<int, int>> edges;  // covering relation, lower -> upper
};

class SubcatEngine {
 public:
  explicit SubcatEngine(DoubleDataPtr data, std::size_t cap = std::size_t{1} << 20);

  const DoubleData& data() const { return *data_; }
  const DoubleDataPtr& data_ptr() const { return data_; }
  const FiniteGroup& group() const { return data_->group(); }
  int field_order() const { return data_->field().order(); }

  std::vector<Triple> enumerate_bicharacters(const Subgroup& k, const Subgroup& h) const;
  /// Checks conditions (i), (ii) and G-invariance directly.
  bool is_bicharacter(const Triple& t) const;
  /// Also checks that K, H are normal and centralize each other.
  bool is_valid(const Triple& t) const;

  /// Every triple, sorted; the simple sets are asserted pairwise distinct.
  const std::vector<Triple>& all_triples() const;
  /// Sorted simple-object indices of S(K,H,B).
  std::vector<int> build_subcat(const Triple& t) const;
  Triple triple_of(const std::vector<int>& simples) const;

  long dim(const Triple& t) const;
  Triple trivial_triple() const;
  Triple whole_triple() const;

  Triple centralizer(const Triple& t) const;
  bool contains(const Triple& t1, const Triple& t2) const;
  Triple meet(const Triple& t1, const Triple& t2) const;
  Triple join(const Triple& t1, const Triple& t2) const;
  Triple muger_center(const Triple& t) const;
  Classification classify(const Triple& t) const;

  bool is_prime() const;
  /// Nondegenerate triples other than (G,{e}) and ({e},G).
  int nondegenerate_count() const;

  /// Closed formula (|G|/|H|) sum_{a in K cap H cap R} |K_a| B(a,a).
  Cyclo gauss_sum(const Triple& t) const;
  /// Sum of theta d^2 over the simples of S(K,H,B).
  Cyclo gauss_sum_direct(const Triple& t) const;
  /// (|K|/|K cap H|) sum_{a in K cap H} B(a,a); meaningful when nondegenerate.
  Cyclo gauss_sum_nondegenerate(const Triple& t) const;
  std::complex<double> central_charge(const Triple& t) const;

  /// ([G,K], C_G(K) cap pi^-1(Z(G/H)), 1); omega and B must be trivial.
  Triple adjoint(const Triple& t) const;
  Triple upper_central_term(int n) const;
  Triple lower_central_term(int n) const;

  Lattice lattice() const;
  CountingStats counting_stats() const;

 private:
  using Pairing = std::vector<int>;
  Triple make_triple(const Subgroup& k, const Subgroup& h, std::vector<int> b) const;
  Triple trivial_pairing(const Subgroup& k, const Subgroup& h) const;
  /// Meet of two pairings P1 on K1 x H1, P2 on K2 x H2, where the first
  /// argument carries beta with sign `sign` (+1 for omega, -1 for omega^-1).
  Triple meet_signed(const Triple& t1, const Triple& t2, int sign) const;
  Triple op(const Triple& t) const;
  bool nondegenerate_pairing(const Triple& t) const;
  void check_counting(const Subgroup& k, const Subgroup& h) const;
  int mod(long v) const {
    const long n = field_order();
    const long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
  }

  DoubleDataPtr data_;
  std::size_t cap_;

  struct Cache {
    std::once_flag once;
    std::vector<Triple> triples;
    std::mutex counting_mutex;
    std::vector<std::vector<bool>> counting_done;  // [class][normal subgroup]
    CountingStats counting;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

}  // namespace qdl
