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

// Shared fixtures and random generators for the test binaries.

#ifndef COVMAT_TESTS_SUPPORT_HPP_
#define COVMAT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "covmat/constructions.hpp"
#include "covmat/matroid.hpp"
#include "covmat/universe.hpp"

namespace covmat::testing {

// "ac" -> {a, c} over a ground set with one-letter labels.
inline SubsetMask S(const GroundSet& g, std::string_view letters) {
  SubsetMask x;
  for (char c : letters) x = x.with(*g.index_of(std::string(1, c)));
  return x;
}

inline SetFamily F(const GroundSet& g, std::initializer_list<std::string_view> sets) {
  std::vector<SubsetMask> members;
  for (auto s : sets) members.push_back(S(g, s));
  return SetFamily(g, std::move(members));
}

inline std::vector<std::string> formatted(const SetFamily& f) {
  std::vector<std::string> out;
  for (SubsetMask x : f) out.push_back(f.ground().format(x));
  return out;
}

// U = {a,b,c}, K1 = {a,b}, K2 = {b,c}, k = (1,1).
inline CapacitatedCovering two_block_covering() {
  GroundSet g = GroundSet::letters(3);
  return CapacitatedCovering::unit(g, {S(g, "ab"), S(g, "bc")});
}

// U = {a,b,c,d}, K1 = {a,b}, K2 = {b,c,d}, k = (1,1).
inline CapacitatedCovering non_partition_covering() {
  GroundSet g = GroundSet::letters(4);
  return CapacitatedCovering::unit(g, {S(g, "ab"), S(g, "bcd")});
}

// U = {a..f}, F1 = {a,b,c}, F2 = {a,d,e}, F3 = {b,e,f}.
inline IndexedFamily six_element_family() {
  GroundSet g = GroundSet::letters(6);
  return IndexedFamily(g, {S(g, "abc"), S(g, "ade"), S(g, "bef")});
}

inline Matroid free_matroid(const GroundSet& g) {
  return Matroid(g, [](SubsetMask) { return true; }, "free");
}

inline Matroid rank_zero_matroid(const GroundSet& g) {
  return Matroid(g, [](SubsetMask x) { return x.empty(); }, "rank-0");
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  SubsetMask subset(const GroundSet& g) {
    return SubsetMask(gen_() & g.full().bits());
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// m distinct non-empty blocks covering U, capacities drawn from [kmin, kmax].
inline CapacitatedCovering random_covering(Rng& rng, std::size_t n, std::size_t m,
                                           int kmin, int kmax) {
  GroundSet g = GroundSet::letters(n);
  m = std::min<std::size_t>(m, (std::size_t{1} << n) - 1);
  while (true) {
    std::vector<SubsetMask> blocks(m);
    for (auto& b : blocks) b = rng.subset(g);
    for (std::size_t e = 0; e < n; ++e) {
      blocks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(m) - 1))] =
          blocks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(m) - 1))];
      (void)e;
    }
    SubsetMask covered;
    for (auto b : blocks) covered = covered | b;
    g.complement(covered).for_each([&](std::size_t e) {
      auto& b = blocks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(m) - 1))];
      b = b.with(e);
    });
    bool ok = std::none_of(blocks.begin(), blocks.end(), [](SubsetMask b) { return b.empty(); });
    for (std::size_t i = 0; ok && i < m; ++i) {
      for (std::size_t j = 0; ok && j < i; ++j) ok = blocks[i] != blocks[j];
    }
    if (!ok) continue;
    std::vector<int> caps(m);
    for (auto& k : caps) k = rng.uniform(kmin, kmax);
    return CapacitatedCovering(g, std::move(blocks), std::move(caps));
  }
}

inline IndexedFamily random_indexed_family(Rng& rng, std::size_t n, std::size_t members) {
  GroundSet g = GroundSet::letters(n);
  std::vector<SubsetMask> fs(members);
  for (auto& f : fs) {
    f = rng.subset(g);
    // Thin out so that matchings are not trivially full.
    if (rng.uniform(0, 1) == 0) f = f & rng.subset(g);
  }
  return IndexedFamily(g, std::move(fs));
}

// All set partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      rec(i + 1, std::max(max_label, label));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 0);
  }
  return out;
}

inline std::vector<SubsetMask> blocks_of(const std::vector<int>& rgs) {
  const int count = *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<SubsetMask> blocks(static_cast<std::size_t>(count));
  for (std::size_t e = 0; e < rgs.size(); ++e) {
    blocks[static_cast<std::size_t>(rgs[e])] = blocks[static_cast<std::size_t>(rgs[e])].with(e);
  }
  return blocks;
}

// Each capacity vector with 0 <= k_i <= |P_i|.
inline void for_each_capacity_vector(const std::vector<SubsetMask>& blocks,
                                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> caps(blocks.size(), 0);
  while (true) {
    fn(caps);
    std::size_t i = 0;
    while (i < caps.size() && ++caps[i] > blocks[i].size()) caps[i++] = 0;
    if (i == caps.size()) return;
  }
}

// A matroid from one of the constructions, chosen at random.
inline Matroid random_constructed_matroid(Rng& rng, std::size_t n) {
  const GroundSet g = GroundSet::letters(n);
  switch (rng.uniform(0, 5)) {
    case 0:
      return k_rank_matroid(g, rng.subset(g), rng.uniform(0, 3));
    case 1: {
      const auto parts = set_partitions(n);
      const auto& rgs = parts[static_cast<std::size_t>(
          rng.uniform(0, static_cast<int>(parts.size()) - 1))];
      auto blocks = blocks_of(rgs);
      std::vector<int> caps;
      for (auto b : blocks) caps.push_back(rng.uniform(0, b.size()));
      return partition_matroid(PartitionWitness(CapacitatedCovering(g, blocks, caps)));
    }
    case 2:
    case 3: {
      auto cov = random_covering(rng, n, static_cast<std::size_t>(rng.uniform(1, 4)), 0, 3);
      return covering_matroid(cov);
    }
    case 4:
      return transversal_matroid(
          random_indexed_family(rng, n, static_cast<std::size_t>(rng.uniform(1, 4))));
    default: {
      auto cov = random_covering(rng, n, static_cast<std::size_t>(rng.uniform(1, 3)), 1, 2);
      return dual(covering_matroid(cov));
    }
  }
}

}  // namespace covmat::testing

#endif  // COVMAT_TESTS_SUPPORT_HPP_
