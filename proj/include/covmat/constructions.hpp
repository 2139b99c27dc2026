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

// Concrete matroids: k-rank, partition, union, covering, transversal and
// partition-circuit matroids, and the conversions between presentations.
//
// Block indices are 0-based throughout the library.

#ifndef COVMAT_CONSTRUCTIONS_HPP_
#define COVMAT_CONSTRUCTIONS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "covmat/matroid.hpp"
#include "covmat/universe.hpp"

namespace covmat {

// Covering blocks K_1..K_m with capacities k_1..k_m. Blocks keep their
// input order because capacities and slice indices refer to positions.
class CapacitatedCovering {
 public:
  // Throws ValidationError unless every block is non-empty, the blocks are
  // pairwise distinct, their union is the ground set, and there is one
  // non-negative capacity per block.
  CapacitatedCovering(GroundSet ground, std::vector<SubsetMask> blocks,
                      std::vector<int> capacities);

  // All capacities 1.
  static CapacitatedCovering unit(GroundSet ground, std::vector<SubsetMask> blocks);

  const GroundSet& ground() const { return ground_; }
  std::span<const SubsetMask> blocks() const { return blocks_; }
  std::span<const int> capacities() const { return capacities_; }
  std::size_t block_count() const { return blocks_.size(); }

  bool is_partition() const;

  // Copy with different capacities (validated the same way).
  CapacitatedCovering with_capacities(std::vector<int> capacities) const;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> blocks_;
  std::vector<int> capacities_;
};

// A capacitated covering whose blocks are pairwise disjoint.
class PartitionWitness {
 public:
  // Throws ValidationError if the blocks overlap.
  explicit PartitionWitness(CapacitatedCovering covering);

  static PartitionWitness unit(GroundSet ground, std::vector<SubsetMask> blocks) {
    return PartitionWitness(CapacitatedCovering::unit(std::move(ground), std::move(blocks)));
  }

  const CapacitatedCovering& covering() const { return covering_; }
  const GroundSet& ground() const { return covering_.ground(); }
  std::span<const SubsetMask> blocks() const { return covering_.blocks(); }
  std::span<const int> capacities() const { return covering_.capacities(); }

  // The blocks as a canonical family, for order-insensitive comparison.
  SetFamily block_family() const;

 private:
  CapacitatedCovering covering_;
};

// F(J) = {F_j : j in J}. Order and repeats are preserved: independence in
// the transversal matroid counts indices, not distinct sets.
class IndexedFamily {
 public:
  // Throws ValidationError for members outside the ground set.
  IndexedFamily(GroundSet ground, std::vector<SubsetMask> members);

  const GroundSet& ground() const { return ground_; }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  GroundSet ground_;
  std::vector<SubsetMask> members_;
};

// Subsets of `support` with at most k elements.
Matroid k_rank_matroid(const GroundSet& ground, SubsetMask support, int k);

// X independent iff |X & P_i| <= k_i for every block.
Matroid partition_matroid(const PartitionWitness& partition);

// Brute-force union over one ground set: X is independent iff its elements
// can be split into parts, part i independent in matroids[i]. Throws
// SizeLimitError past the enumeration cap and PreconditionError on an empty
// list or mismatched ground sets.
Matroid union_matroids(std::span<const Matroid> matroids, const Limits& limits = {});

// Union of the k-rank matroids M(K_i, k_i), decided by a capacitated
// bipartite assignment of elements to blocks.
Matroid covering_matroid(const CapacitatedCovering& covering);

// {X : |X & K_i| <= k_i for all i}, with no matroid claim.
SetFamily naive_covering_family(const CapacitatedCovering& covering,
                                const Limits& limits = {});

bool is_partial_transversal(const IndexedFamily& family, SubsetMask t);

Matroid transversal_matroid(const IndexedFamily& family);

// Blocks F_1..F_|J| with capacity 1, plus U - (union of F) with capacity 0
// when that set is non-empty. Repeated members are merged into one block
// whose capacity is the repeat count, since a covering cannot list a block
// twice; the matroid is unchanged.
CapacitatedCovering transversal_as_covering(const IndexedFamily& family);

// The blocks as an indexed family, or nullopt unless every capacity is 1.
std::optional<IndexedFamily> covering_as_transversal(const CapacitatedCovering& covering);

// X independent iff |X & P| <= |P| - 1 for every block. Capacities of the
// witness are ignored.
Matroid partition_circuit_matroid(const PartitionWitness& partition);

// (|P_i| - min(|P_i|, k_i))_i: the capacities of the dual partition matroid.
std::vector<int> partition_dual_params(const PartitionWitness& partition);

// covering_matroid with every capacity except the i-th set to zero. Throws
// PreconditionError when i is out of range.
Matroid covering_matroid_slice(const CapacitatedCovering& covering, std::size_t i);

}  // namespace covmat

#endif  // COVMAT_CONSTRUCTIONS_HPP_
