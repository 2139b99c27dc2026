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

#include "covmat/constructions.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "covmat/errors.hpp"
#include "covmat/matching.hpp"

namespace covmat {

CapacitatedCovering::CapacitatedCovering(GroundSet ground,
                                         std::vector<SubsetMask> blocks,
                                         std::vector<int> capacities)
    : ground_(std::move(ground)),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)) {
  if (blocks_.empty()) throw ValidationError("covering has no blocks");
  if (capacities_.size() != blocks_.size()) {
    throw ValidationError("expected one capacity per block");
  }
  SubsetMask covered;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw ValidationError("covering block is empty");
    if (!ground_.holds(blocks_[i])) {
      throw ValidationError("covering block outside the ground set");
    }
    if (capacities_[i] < 0) throw ValidationError("negative capacity");
    for (std::size_t j = 0; j < i; ++j) {
      if (blocks_[j] == blocks_[i]) {
        throw ValidationError("duplicate covering block " + ground_.format(blocks_[i]));
      }
    }
    covered = covered | blocks_[i];
  }
  if (covered != ground_.full()) {
    throw ValidationError("blocks do not cover " +
                          ground_.format(ground_.complement(covered)));
  }
}

CapacitatedCovering CapacitatedCovering::unit(GroundSet ground,
                                              std::vector<SubsetMask> blocks) {
  std::vector<int> ones(blocks.size(), 1);
  return CapacitatedCovering(std::move(ground), std::move(blocks), std::move(ones));
}

bool CapacitatedCovering::is_partition() const {
  SubsetMask seen;
  for (SubsetMask b : blocks_) {
    if (b.intersects(seen)) return false;
    seen = seen | b;
  }
  return true;
}

CapacitatedCovering CapacitatedCovering::with_capacities(std::vector<int> capacities) const {
  return CapacitatedCovering(ground_, blocks_, std::move(capacities));
}

PartitionWitness::PartitionWitness(CapacitatedCovering covering)
    : covering_(std::move(covering)) {
  if (!covering_.is_partition()) {
    throw ValidationError("partition blocks must be pairwise disjoint");
  }
}

SetFamily PartitionWitness::block_family() const {
  const auto b = blocks();
  return SetFamily(ground(), std::vector<SubsetMask>(b.begin(), b.end()));
}

IndexedFamily::IndexedFamily(GroundSet ground, std::vector<SubsetMask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  for (SubsetMask f : members_) {
    if (!ground_.holds(f)) throw ValidationError("family member outside the ground set");
  }
}

Matroid k_rank_matroid(const GroundSet& ground, SubsetMask support, int k) {
  if (!ground.holds(support)) throw ValidationError("support outside the ground set");
  if (k < 0) throw ValidationError("negative capacity");
  return Matroid(
      ground,
      [support, k](SubsetMask x) { return x.subset_of(support) && x.size() <= k; },
      "k-rank(" + ground.format(support) + "," + std::to_string(k) + ")",
      [support, k](SubsetMask x) { return std::min((x & support).size(), k); });
}

Matroid partition_matroid(const PartitionWitness& partition) {
  const auto b = partition.blocks();
  const auto c = partition.capacities();
  std::vector<SubsetMask> blocks(b.begin(), b.end());
  std::vector<int> caps(c.begin(), c.end());
  return Matroid(
      partition.ground(),
      [blocks, caps](SubsetMask x) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if ((x & blocks[i]).size() > caps[i]) return false;
        }
        return true;
      },
      "partition",
      [blocks, caps](SubsetMask x) {
        int r = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          r += std::min((x & blocks[i]).size(), caps[i]);
        }
        return r;
      });
}

namespace {

// Assign the remaining elements one at a time; a part only ever grows while
// it stays independent, which is enough because independence is hereditary.
bool split_into_parts(std::span<const Matroid> ms, std::vector<SubsetMask>& parts,
                      const std::vector<std::size_t>& elems, std::size_t next) {
  if (next == elems.size()) return true;
  const std::size_t e = elems[next];
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const SubsetMask grown = parts[i].with(e);
    if (!ms[i].is_independent(grown)) continue;
    const SubsetMask before = parts[i];
    parts[i] = grown;
    if (split_into_parts(ms, parts, elems, next + 1)) return true;
    parts[i] = before;
  }
  return false;
}

}  // namespace

Matroid union_matroids(std::span<const Matroid> matroids, const Limits& limits) {
  if (matroids.empty()) throw PreconditionError("union of an empty list of matroids");
  const GroundSet& ground = matroids.front().ground();
  for (const Matroid& m : matroids) {
    if (!(m.ground() == ground)) {
      throw PreconditionError("union requires a common ground set");
    }
  }
  require_enumerable(ground, limits, "matroid union");
  auto ms = std::make_shared<const std::vector<Matroid>>(matroids.begin(), matroids.end());
  return Matroid(
      ground,
      [ms](SubsetMask x) {
        std::vector<SubsetMask> parts(ms->size());
        return split_into_parts(*ms, parts, x.indices(), 0);
      },
      "union");
}

Matroid covering_matroid(const CapacitatedCovering& covering) {
  const auto b = covering.blocks();
  std::vector<SubsetMask> blocks(b.begin(), b.end());
  std::vector<int> caps;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    // Capacities past |K_i| saturate.
    caps.push_back(std::min(covering.capacities()[i], blocks[i].size()));
  }
  auto assignment = std::make_shared<const BlockAssignment>(std::move(blocks), std::move(caps));
  return Matroid(
      covering.ground(),
      [assignment](SubsetMask x) { return assignment->assigns_all(x); },
      "covering",
      [assignment](SubsetMask x) { return assignment->max_assigned(x); });
}

SetFamily naive_covering_family(const CapacitatedCovering& covering,
                                const Limits& limits) {
  const GroundSet& ground = covering.ground();
  require_enumerable(ground, limits, "naive covering family");
  std::vector<SubsetMask> out;
  const std::uint64_t count = std::uint64_t{1} << ground.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask x(bits);
    bool ok = true;
    for (std::size_t i = 0; i < covering.block_count() && ok; ++i) {
      ok = (x & covering.blocks()[i]).size() <= covering.capacities()[i];
    }
    if (ok) out.push_back(x);
  }
  return SetFamily(ground, std::move(out));
}

bool is_partial_transversal(const IndexedFamily& family, SubsetMask t) {
  const auto m = family.members();
  BlockAssignment assignment(std::vector<SubsetMask>(m.begin(), m.end()),
                             std::vector<int>(m.size(), 1));
  return family.ground().holds(t) && assignment.assigns_all(t);
}

Matroid transversal_matroid(const IndexedFamily& family) {
  const auto m = family.members();
  auto assignment = std::make_shared<const BlockAssignment>(
      std::vector<SubsetMask>(m.begin(), m.end()), std::vector<int>(m.size(), 1));
  return Matroid(
      family.ground(),
      [assignment](SubsetMask x) { return assignment->assigns_all(x); },
      "transversal",
      [assignment](SubsetMask x) { return assignment->max_assigned(x); });
}

CapacitatedCovering transversal_as_covering(const IndexedFamily& family) {
  std::vector<SubsetMask> blocks;
  std::vector<int> caps;
  SubsetMask covered;
  for (SubsetMask f : family.members()) {
    covered = covered | f;
    if (f.empty()) continue;  // an empty member matches nothing
    auto it = std::find(blocks.begin(), blocks.end(), f);
    if (it == blocks.end()) {
      blocks.push_back(f);
      caps.push_back(1);
    } else {
      ++caps[static_cast<std::size_t>(it - blocks.begin())];
    }
  }
  const SubsetMask uncovered = family.ground().complement(covered);
  if (!uncovered.empty()) {
    blocks.push_back(uncovered);
    caps.push_back(0);
  }
  return CapacitatedCovering(family.ground(), std::move(blocks), std::move(caps));
}

std::optional<IndexedFamily> covering_as_transversal(const CapacitatedCovering& covering) {
  const auto caps = covering.capacities();
  if (!std::all_of(caps.begin(), caps.end(), [](int k) { return k == 1; })) {
    return std::nullopt;
  }
  const auto b = covering.blocks();
  return IndexedFamily(covering.ground(), std::vector<SubsetMask>(b.begin(), b.end()));
}

Matroid partition_circuit_matroid(const PartitionWitness& partition) {
  std::vector<int> caps;
  for (SubsetMask p : partition.blocks()) caps.push_back(p.size() - 1);
  const auto b = partition.blocks();
  std::vector<SubsetMask> blocks(b.begin(), b.end());
  return Matroid(
      partition.ground(),
      [blocks](SubsetMask x) {
        return std::all_of(blocks.begin(), blocks.end(), [x](SubsetMask p) {
          return (x & p).size() <= p.size() - 1;
        });
      },
      "partition-circuit",
      [blocks, caps](SubsetMask x) {
        int r = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          r += std::min((x & blocks[i]).size(), caps[i]);
        }
        return r;
      });
}

std::vector<int> partition_dual_params(const PartitionWitness& partition) {
  std::vector<int> out;
  for (std::size_t i = 0; i < partition.blocks().size(); ++i) {
    const SubsetMask p = partition.blocks()[i];
    // |P_i| minus the rank of M(P_i, k_i) on the whole universe.
    out.push_back(p.size() - std::min(p.size(), partition.capacities()[i]));
  }
  return out;
}

Matroid covering_matroid_slice(const CapacitatedCovering& covering, std::size_t i) {
  if (i >= covering.block_count()) {
    throw PreconditionError("block index " + std::to_string(i + 1) +
                            " out of range 1.." + std::to_string(covering.block_count()));
  }
  std::vector<int> caps(covering.block_count(), 0);
  caps[i] = covering.capacities()[i];
  return covering_matroid(covering.with_capacities(std::move(caps)));
}

}  // namespace covmat
