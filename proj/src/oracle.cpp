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

#include "oracle.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace qdl {

namespace {

SimpleSet to_set(const std::vector<bool>& mask) {
  SimpleSet out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

std::string show(const SimpleSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

FusionOracle::FusionOracle(DoubleDataPtr data) : data_(std::move(data)), md_(&data_->modular_data()) {}

SimpleSet FusionOracle::fusion_closure(const SimpleSet& seed) const {
  const int n = md_->size;
  std::vector<bool> in(n, false);
  in[0] = true;
  for (int i : seed) {
    QDL_ENSURE(i >= 0 && i < n, ErrorCode::InvalidArgument, "simple index out of range");
    in[i] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!in[i]) continue;
      if (!in[md_->dual[i]]) in[md_->dual[i]] = changed = true;
      for (int j = 0; j < n; ++j) {
        if (!in[j]) continue;
        for (int k = 0; k < n; ++k)
          if (!in[k] && md_->n(i, j, k) > 0) in[k] = changed = true;
      }
    }
  }
  return to_set(in);
}

std::vector<SimpleSet> FusionOracle::all_subcategories(std::size_t cap) const {
  std::set<SimpleSet> found;
  found.insert(fusion_closure({}));
  for (int i = 0; i < md_->size; ++i) found.insert(fusion_closure({i}));
  std::vector<SimpleSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<SimpleSet> next;
    const std::vector<SimpleSet> current(found.begin(), found.end());
    for (const auto& a : frontier)
      for (const auto& b : current) {
        SimpleSet u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        SimpleSet c = fusion_closure(u);
        if (found.insert(c).second) {
          if (found.size() > cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " closed sets");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

SimpleSet FusionOracle::adjoint(const SimpleSet& d) const {
  SimpleSet seed;
  for (int x : d)
    for (int k = 0; k < md_->size; ++k)
      if (md_->n(x, md_->dual[x], k) > 0) seed.push_back(k);
  return fusion_closure(seed);
}

SimpleSet FusionOracle::commutator(const SimpleSet& d) const {
  std::vector<bool> in(md_->size, false);
  for (int i : d) in[i] = true;
  SimpleSet out;
  for (int x = 0; x < md_->size; ++x) {
    bool ok = true;
    for (int k = 0; k < md_->size && ok; ++k)
      if (md_->n(x, md_->dual[x], k) > 0 && !in[k]) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<SimpleSet> FusionOracle::upper_series() const {
  SimpleSet all(md_->size);
  for (int i = 0; i < md_->size; ++i) all[i] = i;
  std::vector<SimpleSet> out{all};
  while (true) {
    SimpleSet next = adjoint(out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

std::vector<SimpleSet> FusionOracle::lower_series() const {
  std::vector<SimpleSet> out{SimpleSet{0}};
  while (true) {
    SimpleSet next = commutator(out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

SimpleSet centralizer_by_predicate(const DoubleData& data, const SimpleSet& d) {
  SimpleSet out;
  for (int x = 0; x < data.size(); ++x) {
    bool ok = true;
    for (int y : d)
      if (!data.centralize(x, y)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

ClosureReport certify(const SubcatEngine& engine, std::size_t cap) {
  const DoubleData& data = engine.data();
  const long order = engine.group().order();
  ClosureReport rep;
  auto fail = [&](const std::string& what) {
    rep.match = false;
    rep.mismatches.push_back(what);
  };
  const auto& triples = engine.all_triples();
  std::set<SimpleSet> from_triples;
  for (const auto& t : triples) {
    const SimpleSet s = engine.build_subcat(t);
    from_triples.insert(s);
    const Triple c = engine.centralizer(t);
    const SimpleSet cs = engine.build_subcat(c);
    if (centralizer_by_predicate(data, s) != cs) fail("centralizer formula differs from predicate at " + show(s));
    if (centralizer_by_predicate(data, cs) != s) fail("double centralizer differs at " + show(s));
    if (engine.dim(t) * engine.dim(c) != order * order) fail("dimension product differs at " + show(s));
  }
  if (data.twisted()) return rep;

  FusionOracle oracle(engine.data_ptr());
  rep.closed_sets = oracle.all_subcategories(cap);
  const std::set<SimpleSet> from_oracle(rep.closed_sets.begin(), rep.closed_sets.end());
  std::set_difference(from_oracle.begin(), from_oracle.end(), from_triples.begin(), from_triples.end(),
                      std::back_inserter(rep.only_in_oracle));
  std::set_difference(from_triples.begin(), from_triples.end(), from_oracle.begin(), from_oracle.end(),
                      std::back_inserter(rep.only_in_triples));
  for (const auto& s : rep.only_in_oracle) fail("closed set without triple: " + show(s));
  for (const auto& s : rep.only_in_triples) fail("triple set not fusion-closed: " + show(s));
  for (const auto& s : rep.closed_sets) {
    try {
      const Triple t = engine.triple_of(s);
      if (!std::binary_search(triples.begin(), triples.end(), t)) fail("triple_of gives unlisted triple at " + show(s));
    } catch (const Error& e) {
      fail(std::string("triple_of failed at ") + show(s) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace qdl
