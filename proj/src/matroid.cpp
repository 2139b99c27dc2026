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

#include "covmat/matroid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "covmat/errors.hpp"

namespace covmat {
namespace {

#ifdef COVMAT_AUDIT_RANK_HINTS
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
#endif

// indep[X] for every X, filled in numeric order so that every X - x is
// already known. Supersets of dependent sets skip the oracle.
std::vector<bool> independence_table(const Matroid& m, const Limits& limits,
                                     std::string_view what) {
  require_enumerable(m.ground(), limits, what);
  const std::uint64_t count = std::uint64_t{1} << m.ground().size();
  std::vector<bool> table(count, false);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask x(bits);
    bool down_closed = true;
    for (std::uint64_t rest = bits; rest != 0 && down_closed; rest &= rest - 1) {
      down_closed = table[bits & ~(rest & (~rest + 1))];
    }
    table[bits] = down_closed && m.is_independent(x);
  }
  return table;
}

}  // namespace

Matroid::Matroid(GroundSet ground, Oracle independent, std::string provenance,
                 std::optional<RankFunction> rank_hint)
    : ground_(std::move(ground)),
      independent_(std::move(independent)),
      provenance_(std::move(provenance)),
      rank_hint_(std::move(rank_hint)) {
  if (!independent_(SubsetMask{})) {
    throw PreconditionError(provenance_ + ": empty set is not independent");
  }
#ifdef COVMAT_AUDIT_RANK_HINTS
  if (rank_hint_) {
    std::uint64_t state = 0x5eedULL + ground_.size();
    for (int i = 0; i < 32; ++i) {
      const SubsetMask x(splitmix64(state) & ground_.full().bits());
      if ((*rank_hint_)(x) != rank(*this, x)) {
        throw std::logic_error(provenance_ + ": rank hint disagrees with greedy rank on " +
                               ground_.format(x));
      }
    }
  }
#endif
}

Matroid Matroid::from_family(const SetFamily& family, const Limits& limits) {
  const AxiomCertificate cert = check_independence_axioms(family, limits);
  if (!cert.is_matroid()) {
    throw PreconditionError("family is not a matroid: " +
                            describe(cert, family.ground()));
  }
  return Matroid(family.ground(),
                 [family](SubsetMask x) { return family.contains(x); },
                 "explicit family");
}

int Matroid::fast_rank(SubsetMask x) const {
  return rank_hint_ ? (*rank_hint_)(x) : rank(*this, x);
}

AxiomCertificate check_independence_axioms(const SetFamily& family,
                                           const Limits& limits) {
  const GroundSet& ground = family.ground();
  require_enumerable(ground, limits, "axiom check");
  std::vector<bool> member(std::size_t{1} << ground.size(), false);
  for (SubsetMask x : family) member[x.bits()] = true;

  if (!member[0]) return {AxiomVerdict::kViolatesI1, std::nullopt, std::nullopt};

  // I2. The first member with a non-member subset also has a non-member
  // subset of size one less, so the cheap test finds the right I; the
  // canonical-first bad subset is then located by a scan of I.
  for (SubsetMask i : family) {
    bool bad = false;
    i.for_each([&](std::size_t e) { bad = bad || !member[i.without(e).bits()]; });
    if (!bad) continue;
    SubsetMask witness;
    for_each_subset_by_size(i, [&](SubsetMask sub) {
      if (member[sub.bits()]) return true;
      witness = sub;
      return false;
    });
    return {AxiomVerdict::kViolatesI2, i, witness};
  }

  // I3. With I2 in place it suffices to try |I2| = |I1| + 1.
  std::map<int, std::vector<SubsetMask>> by_size;
  for (SubsetMask x : family) by_size[x.size()].push_back(x);
  for (SubsetMask small : family) {
    auto next = by_size.find(small.size() + 1);
    if (next == by_size.end()) continue;
    SubsetMask augmenters;
    ground.complement(small).for_each([&](std::size_t u) {
      if (member[small.with(u).bits()]) augmenters = augmenters.with(u);
    });
    for (SubsetMask large : next->second) {
      if (!(large - small).intersects(augmenters)) {
        return {AxiomVerdict::kViolatesI3, small, large};
      }
    }
  }
  return {};
}

std::string describe(const AxiomCertificate& cert, const GroundSet& ground) {
  switch (cert.verdict) {
    case AxiomVerdict::kMatroid:
      return "matroid";
    case AxiomVerdict::kViolatesI1:
      return "violates I1: {} is not independent";
    case AxiomVerdict::kViolatesI2:
      return "violates I2: I=" + ground.format(*cert.first) +
             ", I'=" + ground.format(*cert.second);
    case AxiomVerdict::kViolatesI3:
      return "violates I3: I1=" + ground.format(*cert.first) +
             ", I2=" + ground.format(*cert.second);
  }
  return {};
}

int rank(const Matroid& m, SubsetMask x) {
  SubsetMask kept;
  x.for_each([&](std::size_t e) {
    if (m.is_independent(kept.with(e))) kept = kept.with(e);
  });
  return kept.size();
}

SubsetMask closure(const Matroid& m, SubsetMask x) {
  // u is in cl(X) iff a greedy basis of X stays a basis after adding u.
  SubsetMask basis;
  x.for_each([&](std::size_t e) {
    if (m.is_independent(basis.with(e))) basis = basis.with(e);
  });
  SubsetMask out = x;
  m.ground().complement(x).for_each([&](std::size_t u) {
    if (!m.is_independent(basis.with(u))) out = out.with(u);
  });
  return out;
}

SetFamily independents(const Matroid& m, const Limits& limits) {
  const auto table = independence_table(m, limits, "independents");
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    if (table[bits]) out.emplace_back(bits);
  }
  return SetFamily(m.ground(), std::move(out));
}

SetFamily circuits(const Matroid& m, const Limits& limits) {
  const auto table = independence_table(m, limits, "circuits");
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    if (table[bits]) continue;
    bool minimal = true;
    for (std::uint64_t rest = bits; rest != 0 && minimal; rest &= rest - 1) {
      minimal = table[bits & ~(rest & (~rest + 1))];
    }
    if (minimal) out.emplace_back(bits);
  }
  return SetFamily(m.ground(), std::move(out));
}

SetFamily bases(const Matroid& m, const Limits& limits) {
  const auto table = independence_table(m, limits, "bases");
  const int r = rank(m, m.ground().full());
  std::vector<SubsetMask> out;
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    if (table[bits] && std::popcount(bits) == r) out.emplace_back(bits);
  }
  return SetFamily(m.ground(), std::move(out));
}

Matroid dual(const Matroid& m) {
  const SubsetMask full = m.ground().full();
  const int full_rank = m.fast_rank(full);
  auto dual_rank = [m, full, full_rank](SubsetMask x) {
    return x.size() + m.fast_rank(full - x) - full_rank;
  };
  return Matroid(
      m.ground(),
      [dual_rank](SubsetMask x) { return dual_rank(x) == x.size(); },
      "dual(" + m.provenance() + ")", Matroid::RankFunction(dual_rank));
}

std::optional<SubsetMask> first_difference(const Matroid& a, const Matroid& b,
                                           const Limits& limits) {
  if (a.ground().size() != b.ground().size()) {
    throw PreconditionError("matroids have ground sets of different sizes");
  }
  require_enumerable(a.ground(), limits, "family comparison");
  std::optional<SubsetMask> diff;
  for_each_subset_by_size(a.ground().full(), [&](SubsetMask x) {
    if (a.is_independent(x) == b.is_independent(x)) return true;
    diff = x;
    return false;
  });
  return diff;
}

namespace {

struct IsoData {
  std::vector<bool> table;
  std::vector<int> circuit_sizes;
  // Per element: number of independent sets and of circuits containing it,
  // bucketed by cardinality.
  std::vector<std::vector<int>> signature;
};

IsoData iso_data(const Matroid& m, const Limits& limits) {
  IsoData d;
  d.table = independence_table(m, limits, "isomorphism");
  const std::size_t n = m.ground().size();
  d.signature.assign(n, std::vector<int>(2 * (n + 1), 0));
  for (std::uint64_t bits = 0; bits < d.table.size(); ++bits) {
    const SubsetMask x(bits);
    const auto k = static_cast<std::size_t>(x.size());
    if (d.table[bits]) {
      x.for_each([&](std::size_t e) { ++d.signature[e][k]; });
      continue;
    }
    bool minimal = true;
    x.for_each([&](std::size_t e) { minimal = minimal && d.table[x.without(e).bits()]; });
    if (!minimal) continue;
    d.circuit_sizes.push_back(x.size());
    x.for_each([&](std::size_t e) { ++d.signature[e][n + 1 + k]; });
  }
  std::sort(d.circuit_sizes.begin(), d.circuit_sizes.end());
  return d;
}

SubsetMask map_subset(const Bijection& map, SubsetMask x) {
  SubsetMask out;
  x.for_each([&](std::size_t e) { out = out.with(map[e]); });
  return out;
}

bool extend(const IsoData& a, const IsoData& b, Bijection& map,
            std::vector<bool>& used, std::size_t next) {
  const std::size_t n = map.size();
  if (next == n) return true;
  for (std::size_t target = 0; target < n; ++target) {
    if (used[target] || a.signature[next] != b.signature[target]) continue;
    map[next] = target;
    // Every subset of {0..next} that contains `next` is now fully mapped.
    bool consistent = true;
    const SubsetMask prefix((std::uint64_t{1} << next) - 1);
    for_each_subset_by_size(prefix, [&](SubsetMask rest) {
      const SubsetMask x = rest.with(next);
      consistent = a.table[x.bits()] == b.table[map_subset(map, x).bits()];
      return consistent;
    });
    if (!consistent) continue;
    used[target] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[target] = false;
  }
  return false;
}

}  // namespace

std::optional<Bijection> find_isomorphism(const Matroid& a, const Matroid& b,
                                          const Limits& limits) {
  for (const Matroid* m : {&a, &b}) {
    if (m->ground().size() > limits.isomorphism) {
      throw SizeLimitError("isomorphism: ground set of " +
                           std::to_string(m->ground().size()) +
                           " elements exceeds the cap of " +
                           std::to_string(limits.isomorphism));
    }
  }
  if (a.ground().size() != b.ground().size()) return std::nullopt;
  if (rank(a, a.ground().full()) != rank(b, b.ground().full())) return std::nullopt;
  const IsoData da = iso_data(a, limits);
  const IsoData db = iso_data(b, limits);
  if (da.circuit_sizes != db.circuit_sizes) return std::nullopt;
  if (std::count(da.table.begin(), da.table.end(), true) !=
      std::count(db.table.begin(), db.table.end(), true)) {
    return std::nullopt;
  }
  Bijection map(a.ground().size(), 0);
  std::vector<bool> used(map.size(), false);
  if (!extend(da, db, map, used, 0)) return std::nullopt;
  return map;
}

bool is_identically_self_dual(const Matroid& m, const Limits& limits) {
  return same_independents(m, dual(m), limits);
}

}  // namespace covmat
