// Copyright 2026 The coopvals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracle.h"

#include <algorithm>
#include <stdexcept>

namespace coopvals::oracle {
namespace {

Members Union(const Members& a, const Members& b) {
  Members out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Members Intersection(const Members& a, const Members& b) {
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool IsSubset(const Members& a, const Members& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Members Grand(int n) {
  Members out;
  for (int i = 0; i < n; ++i) out.push_back(i);
  return out;
}

void Grow(int n, int next, Members& current, std::vector<Members>& out) {
  if (next == n) {
    out.push_back(current);
    return;
  }
  Grow(n, next + 1, current, out);
  current.push_back(next);
  Grow(n, next + 1, current, out);
  current.pop_back();
}

}  // namespace

std::vector<Members> AllSubsets(int n) {
  std::vector<Members> out;
  Members current;
  Grow(n, 0, current, out);
  return out;
}

Rational Worth(const TuGame& v, const Members& s) {
  std::size_t index = 0;
  for (int i : s) index += std::size_t{1} << i;
  return v.table()[index];
}

Members Without(const Members& s, int i) {
  Members out;
  for (int j : s) {
    if (j != i) out.push_back(j);
  }
  return out;
}

Members Complement(const Members& s, int n) {
  Members out;
  for (int i = 0; i < n; ++i) {
    if (!Contains(s, i)) out.push_back(i);
  }
  return out;
}

bool Contains(const Members& s, int i) { return std::find(s.begin(), s.end(), i) != s.end(); }

std::vector<Rational> Marginal(const TuGame& v) {
  const int n = v.players();
  const Members grand = Grand(n);
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(Worth(v, grand) - Worth(v, Without(grand, i)));
  return out;
}

std::vector<Rational> Residual(const TuGame& v, const std::vector<Rational>& eta) {
  const int n = v.players();
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    bool first = true;
    Rational best;
    for (const Members& s : AllSubsets(n)) {
      if (!Contains(s, i)) continue;
      Rational r = Worth(v, s);
      for (int j : s) {
        if (j != i) r -= eta[j];
      }
      if (first || r > best) best = r;
      first = false;
    }
    out.push_back(best);
  }
  return out;
}

std::vector<Rational> MinimalRights(const TuGame& v) { return Residual(v, Marginal(v)); }

namespace {

std::vector<Rational> MarginalExtreme(const TuGame& v, bool take_max) {
  const int n = v.players();
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    bool first = true;
    Rational best;
    for (const Members& s : AllSubsets(n)) {
      if (!Contains(s, i)) continue;
      const Rational d = Worth(v, s) - Worth(v, Without(s, i));
      if (first || (take_max ? d > best : d < best)) best = d;
      first = false;
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace

std::vector<Rational> KikutaMin(const TuGame& v) { return MarginalExtreme(v, false); }
std::vector<Rational> MilnorMax(const TuGame& v) { return MarginalExtreme(v, true); }

std::vector<Rational> DualTable(const TuGame& v) {
  const int n = v.players();
  const Rational grand = Worth(v, Grand(n));
  std::vector<Rational> out(std::size_t{1} << n);
  for (const Members& s : AllSubsets(n)) {
    std::size_t index = 0;
    for (int i : s) index += std::size_t{1} << i;
    out[index] = grand - Worth(v, Complement(s, n));
  }
  return out;
}

bool ConvexByPairs(const TuGame& v) {
  const std::vector<Members> all = AllSubsets(v.players());
  for (const Members& s : all) {
    for (const Members& t : all) {
      if (Worth(v, Union(s, t)) + Worth(v, Intersection(s, t)) < Worth(v, s) + Worth(v, t)) {
        return false;
      }
    }
  }
  return true;
}

bool Superadditive(const TuGame& v) {
  const std::vector<Members> all = AllSubsets(v.players());
  for (const Members& s : all) {
    for (const Members& t : all) {
      if (!Intersection(s, t).empty()) continue;
      if (Worth(v, Union(s, t)) < Worth(v, s) + Worth(v, t)) return false;
    }
  }
  return true;
}

bool Monotonic(const TuGame& v) {
  const std::vector<Members> all = AllSubsets(v.players());
  for (const Members& s : all) {
    for (const Members& t : all) {
      if (IsSubset(s, t) && Worth(v, s) > Worth(v, t)) return false;
    }
  }
  return true;
}

bool SemiBalanced(const TuGame& v) {
  const int n = v.players();
  const Members grand = Grand(n);
  const Rational vn = Worth(v, grand);
  for (const Members& s : AllSubsets(n)) {
    if (s.empty()) continue;
    Rational lhs = Worth(v, s);
    for (int j : s) lhs += Worth(v, Without(grand, j));
    if (lhs > Rational(static_cast<long>(s.size())) * vn) return false;
  }
  return true;
}

std::vector<Rational> Balance(const TuGame& v, const std::vector<Rational>& lo,
                              const std::vector<Rational>& hi) {
  const int n = v.players();
  Rational sum_lo, spread;
  for (int i = 0; i < n; ++i) {
    sum_lo += lo[i];
    spread += hi[i] - lo[i];
  }
  if (spread == 0) throw std::invalid_argument("oracle balance: zero spread");
  const Rational grand = Worth(v, Grand(n));
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(lo[i] + (hi[i] - lo[i]) * (grand - sum_lo) / spread);
  return out;
}

}  // namespace coopvals::oracle
