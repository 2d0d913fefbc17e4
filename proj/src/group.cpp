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

#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace qdl {

Subgroup::Subgroup(std::vector<bool> mask, bool normal) : mask_(std::move(mask)), normal_(normal) {
  position_.assign(mask_.size(), -1);
  for (std::size_t g = 0; g < mask_.size(); ++g) {
    if (mask_[g]) {
      position_[g] = static_cast<int>(elements_.size());
      elements_.push_back(static_cast<Elem>(g));
    }
  }
}

bool Subgroup::subset_of(const Subgroup& other) const {
  for (Elem g : elements_)
    if (!other.contains(g)) return false;
  return true;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

namespace {

std::string triple_str(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_mult_table(std::vector<std::vector<int>> table, std::string name,
                                         std::size_t cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty multiplication table");
  if (static_cast<std::size_t>(n) > cap)
    throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorCode::NotAGroup, "row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || v >= n) throw Error(ErrorCode::NotAGroup, "entry out of range in row " + std::to_string(i));
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NotAGroup, "no two-sided identity");

  if (identity != 0) {
    // Relabel by the transposition (0 identity).
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[identity]);
    std::vector<std::vector<int>> swapped(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) swapped[relabel[a]][relabel[b]] = relabel[table[a][b]];
    table = std::move(swapped);
  }

  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult_[static_cast<std::size_t>(a) * n + b] = table[a][b];

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::NotAGroup, "associativity fails at " + triple_str(a, b, c));
    }
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(std::vector<Permutation> gens, std::string name,
                                                     std::size_t cap) {
  const std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != degree) throw Error(ErrorCode::InvalidArgument, "generators act on different domains");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
        throw Error(ErrorCode::InvalidArgument, "generator is not a bijection");
      seen[v] = true;
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // (p * q)[i] = p[q[i]]
  auto compose = [](const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Permutation p = compose(elems[i], s);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > cap)
          throw Error(ErrorCode::GroupTooLarge, "closure exceeds cap " + std::to_string(cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult_[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inv_[a] = b;
  g.finalize();
  return g;
}

void FiniteGroup::finalize() {
  const int n = order_;
  elem_order_.assign(n, 1);
  exponent_ = 1;
  for (int g = 0; g < n; ++g) {
    int k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) ++k;
    elem_order_[g] = k;
    exponent_ = std::lcm(exponent_, elem_order_[g]);
  }

  class_of_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    const int c = static_cast<int>(reps_.size());
    reps_.push_back(g);
    std::vector<Elem> members;
    for (int x = 0; x < n; ++x) {
      const Elem y = conj(x, g);
      if (class_of_[y] < 0) {
        class_of_[y] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  for (Elem a : reps_) rep_centralizers_.push_back(centralizer(a));
}

const std::vector<Subgroup>& FiniteGroup::normal_subgroups() const {
  // Join-closure of the normal closures of single elements.
  std::call_once(normal_cache_->once, [this] {
    std::set<std::vector<bool>> found;
    std::vector<Subgroup> list;
    auto add = [&](Subgroup s) {
      if (found.insert(s.mask()).second) list.push_back(std::move(s));
    };
    for (Elem a : reps_) add(normal_closure({a}));
    for (std::size_t done = 0; done < list.size();) {
      const std::size_t count = list.size();
      for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = std::max(i + 1, done); j < count; ++j) add(product(list[i], list[j]));
      done = count;
    }
    std::sort(list.begin(), list.end());
    normal_cache_->list = std::move(list);
  });
  return normal_cache_->list;
}

std::vector<std::vector<int>> FiniteGroup::mult_table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::is_subgroup(const std::vector<bool>& members) const {
  if (static_cast<int>(members.size()) != order_ || !members[0]) return false;
  for (int a = 0; a < order_; ++a) {
    if (!members[a]) continue;
    for (int b = 0; b < order_; ++b)
      if (members[b] && !members[mul(a, b)]) return false;
  }
  return true;
}

Subgroup FiniteGroup::make_subgroup(const std::vector<bool>& members) const {
  bool normal = true;
  for (int g = 0; g < order_ && normal; ++g) {
    if (!members[g]) continue;
    for (int x = 0; x < order_ && normal; ++x) normal = members[conj(x, g)];
  }
  return Subgroup(members, normal);
}

Subgroup FiniteGroup::generated(const std::vector<Elem>& gens) const {
  std::vector<bool> mask(order_, false);
  std::vector<Elem> list{0};
  mask[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : gens) {
      const Elem p = mul(list[i], s);
      if (!mask[p]) {
        mask[p] = true;
        list.push_back(p);
      }
    }
  return make_subgroup(mask);
}

Subgroup FiniteGroup::normal_closure(const std::vector<Elem>& gens) const {
  std::vector<Elem> conjugates;
  std::vector<bool> seen(order_, false);
  for (Elem s : gens)
    for (int x = 0; x < order_; ++x) {
      const Elem c = conj(x, s);
      if (!seen[c]) {
        seen[c] = true;
        conjugates.push_back(c);
      }
    }
  return generated(conjugates);
}

Subgroup FiniteGroup::centralizer(Elem a) const {
  std::vector<bool> mask(order_);
  for (int x = 0; x < order_; ++x) mask[x] = commute(a, x);
  return make_subgroup(mask);
}

Subgroup FiniteGroup::centralizer(const Subgroup& k) const {
  std::vector<bool> mask(order_);
  for (int x = 0; x < order_; ++x) {
    bool ok = true;
    for (Elem y : k.elements())
      if (!commute(x, y)) {
        ok = false;
        break;
      }
    mask[x] = ok;
  }
  return make_subgroup(mask);
}

Subgroup FiniteGroup::center() const { return centralizer(whole()); }

Subgroup FiniteGroup::trivial_subgroup() const {
  std::vector<bool> mask(order_, false);
  mask[0] = true;
  return Subgroup(mask, true);
}

Subgroup FiniteGroup::whole() const { return Subgroup(std::vector<bool>(order_, true), true); }

Subgroup FiniteGroup::intersection(const Subgroup& a, const Subgroup& b) const {
  std::vector<bool> mask(order_);
  for (int g = 0; g < order_; ++g) mask[g] = a.contains(g) && b.contains(g);
  return make_subgroup(mask);
}

Subgroup FiniteGroup::product(const Subgroup& a, const Subgroup& b) const {
  std::vector<bool> mask(order_, false);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) mask[mul(x, y)] = true;
  return make_subgroup(mask);
}

bool FiniteGroup::centralize_each_other(const Subgroup& a, const Subgroup& b) const {
  for (Elem x : a.elements())
    for (Elem y : b.elements())
      if (!commute(x, y)) return false;
  return true;
}

int FiniteGroup::normal_subgroup_index(const Subgroup& s) const {
  for (std::size_t i = 0; i < normal_subgroups().size(); ++i)
    if (normal_subgroups()[i] == s) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> FiniteGroup::centralizing_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  const int count = static_cast<int>(normal_subgroups().size());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (centralize_each_other(normal_subgroups()[i], normal_subgroups()[j])) pairs.emplace_back(i, j);
  return pairs;
}

Subgroup FiniteGroup::commutator_subgroup(const Subgroup& k) const {
  std::vector<Elem> comms;
  std::vector<bool> seen(order_, false);
  for (int g = 0; g < order_; ++g)
    for (Elem x : k.elements()) {
      const Elem c = mul(conj(g, x), inv(x));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return normal_closure(comms);
}

Subgroup FiniteGroup::preimage_of_center_of_quotient(const Subgroup& h) const {
  std::vector<bool> mask(order_);
  for (int g = 0; g < order_; ++g) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) ok = h.contains(mul(conj(g, x), inv(x)));
    mask[g] = ok;
  }
  return make_subgroup(mask);
}

CentralSeries FiniteGroup::central_series() const {
  CentralSeries s;
  s.upper.push_back(trivial_subgroup());
  for (;;) {
    Subgroup next = preimage_of_center_of_quotient(s.upper.back());
    if (next == s.upper.back()) break;
    s.upper.push_back(std::move(next));
  }
  s.lower.push_back(whole());
  for (;;) {
    Subgroup next = commutator_subgroup(s.lower.back());
    if (next == s.lower.back()) break;
    s.lower.push_back(std::move(next));
  }
  return s;
}

EmbeddedGroup FiniteGroup::embed(const Subgroup& s) const {
  EmbeddedGroup out;
  out.to_parent = s.elements();
  out.from_parent.assign(order_, -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = static_cast<int>(i);

  const int m = static_cast<int>(s.size());
  FiniteGroup g;
  g.order_ = m;
  g.name_ = name_ + "_sub";
  g.mult_.resize(static_cast<std::size_t>(m) * m);
  g.inv_.resize(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      g.mult_[static_cast<std::size_t>(a) * m + b] = out.from_parent[mul(out.to_parent[a], out.to_parent[b])];
    g.inv_[a] = out.from_parent[inv(out.to_parent[a])];
  }
  g.finalize();
  out.group = std::make_shared<const FiniteGroup>(std::move(g));
  return out;
}

}  // namespace qdl
