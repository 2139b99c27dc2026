// Copyright 2026 The Authors.
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

#include "covmat/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "covmat/errors.hpp"

namespace covmat::oracle {
namespace {

void cap(std::size_t value, std::size_t limit, const char* what) {
  if (value > limit) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(value) +
                         " exceeds the oracle cap of " + std::to_string(limit));
  }
}

std::vector<bool> scan(const Matroid& m, const OracleLimits& limits) {
  cap(m.ground().size(), limits.dual_ground, "oracle family scan");
  const std::uint64_t count = std::uint64_t{1} << m.ground().size();
  std::vector<bool> indep(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    indep[bits] = m.is_independent(SubsetMask(bits));
  }
  return indep;
}

bool try_injections(const IndexedFamily& family, const std::vector<std::size_t>& elems,
                    std::vector<std::size_t>& image, std::vector<bool>& used) {
  if (image.size() == elems.size()) {
    for (std::size_t t = 0; t < elems.size(); ++t) {
      if (!family.members()[image[t]].contains(elems[t])) return false;
    }
    return true;
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    image.push_back(j);
    const bool found = try_injections(family, elems, image, used);
    image.pop_back();
    used[j] = false;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool bf_union_independent(std::span<const Matroid> matroids, SubsetMask x,
                          const OracleLimits& limits) {
  cap(static_cast<std::size_t>(x.size()), limits.union_set, "bf_union_independent |X|");
  cap(matroids.size(), limits.union_matroids, "bf_union_independent matroid count");
  if (matroids.empty()) return x.empty();
  const std::vector<std::size_t> elems = x.indices();
  const std::size_t m = matroids.size();
  // Base-m counter over assignments element -> matroid index.
  std::vector<std::size_t> digit(elems.size(), 0);
  std::vector<SubsetMask> parts(m);
  while (true) {
    std::fill(parts.begin(), parts.end(), SubsetMask{});
    for (std::size_t p = 0; p < elems.size(); ++p) {
      parts[digit[p]] = parts[digit[p]].with(elems[p]);
    }
    bool all_independent = true;
    for (std::size_t i = 0; i < m && all_independent; ++i) {
      all_independent = matroids[i].is_independent(parts[i]);
    }
    if (all_independent) return true;
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == m) digit[p++] = 0;
    if (p == digit.size()) return false;
  }
}

int bf_rank(const Matroid& m, SubsetMask x, const OracleLimits& limits) {
  cap(static_cast<std::size_t>(x.size()), limits.rank_set, "bf_rank |X|");
  int best = 0;
  std::uint64_t sub = x.bits();
  while (true) {
    const SubsetMask s(sub);
    if (s.size() > best && m.is_independent(s)) best = s.size();
    if (sub == 0) break;
    sub = (sub - 1) & x.bits();
  }
  return best;
}

bool bf_matching(const IndexedFamily& family, SubsetMask t, const OracleLimits& limits) {
  // No injection into a smaller index set.
  if (static_cast<std::size_t>(t.size()) > family.size()) return false;
  cap(static_cast<std::size_t>(t.size()), limits.matching_set, "bf_matching |T|");
  std::vector<std::size_t> image;
  std::vector<bool> used(family.size(), false);
  return try_injections(family, t.indices(), image, used);
}

SetFamily bf_independent_family(const Matroid& m, const OracleLimits& limits) {
  const auto indep = scan(m, limits);
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < indep.size(); ++bits) {
    if (indep[bits]) out.emplace_back(bits);
  }
  return SetFamily(m.ground(), std::move(out));
}

SetFamily bf_circuit_family(const Matroid& m, const OracleLimits& limits) {
  const auto indep = scan(m, limits);
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < indep.size(); ++bits) {
    if (indep[bits]) continue;
    bool minimal = true;
    // Every proper subset must be independent.
    for (std::uint64_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
      if (!indep[sub]) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal) out.emplace_back(bits);
  }
  return SetFamily(m.ground(), std::move(out));
}

SetFamily bf_dual_family(const Matroid& m, const OracleLimits& limits) {
  const auto indep = scan(m, limits);
  std::vector<std::uint64_t> members;
  for (std::uint64_t bits = 0; bits < indep.size(); ++bits) {
    if (indep[bits]) members.push_back(bits);
  }
  // Bases: members with no independent one-element extension (the family
  // is down-closed, so this is maximality).
  const std::uint64_t full = m.ground().full().bits();
  std::vector<std::uint64_t> bases;
  for (std::uint64_t b : members) {
    bool maximal = true;
    for (std::uint64_t e = 1; e <= full && maximal; e <<= 1) {
      if ((b & e) == 0 && indep[b | e]) maximal = false;
    }
    if (maximal) bases.push_back(b);
  }
  std::set<std::uint64_t> dual;
  for (std::uint64_t b : bases) {
    const std::uint64_t co = full & ~b;
    for (std::uint64_t sub = co;; sub = (sub - 1) & co) {
      dual.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<SubsetMask> out;
  for (std::uint64_t bits : dual) out.emplace_back(bits);
  return SetFamily(m.ground(), std::move(out));
}

bool bf_is_matroid(const SetFamily& family, const OracleLimits& limits) {
  cap(family.size(), limits.axiom_family, "bf_is_matroid |F|");
  const auto members = family.members();
  auto in = [&](std::uint64_t bits) {
    return std::find(members.begin(), members.end(), SubsetMask(bits)) != members.end();
  };
  if (!in(0)) return false;
  for (SubsetMask i : members) {
    for (std::uint64_t sub = i.bits();; sub = (sub - 1) & i.bits()) {
      if (!in(sub)) return false;
      if (sub == 0) break;
    }
  }
  for (SubsetMask small : members) {
    for (SubsetMask large : members) {
      if (small.size() >= large.size()) continue;
      bool augmentable = false;
      (large - small).for_each([&](std::size_t u) {
        augmentable = augmentable || in(small.with(u).bits());
      });
      if (!augmentable) return false;
    }
  }
  return true;
}

}  // namespace covmat::oracle
