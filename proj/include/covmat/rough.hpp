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

// Covering-based approximation operators of the second type, computed two
// ways: directly from the blocks, and through the k-rank matroids M(K_i, k_i)
// of the blocks (loops, singleton ranks and set ranks of each slice). The
// two routes are separate entry points so callers can diff them.

#ifndef COVMAT_ROUGH_HPP_
#define COVMAT_ROUGH_HPP_

#include <span>
#include <vector>

#include "covmat/constructions.hpp"
#include "covmat/matroid.hpp"
#include "covmat/universe.hpp"

namespace covmat {

class ApproximationSpace {
 public:
  // Throws ValidationError unless the blocks form a covering.
  ApproximationSpace(GroundSet ground, std::vector<SubsetMask> blocks);
  explicit ApproximationSpace(const CapacitatedCovering& covering);

  const GroundSet& ground() const { return ground_; }
  std::span<const SubsetMask> blocks() const { return blocks_; }

 private:
  GroundSet ground_;
  std::vector<SubsetMask> blocks_;
};

// Intersection of the blocks containing x. Throws PreconditionError for an
// index outside the ground set.
SubsetMask neighborhood(const ApproximationSpace& space, std::size_t x);

// SL(X): union of the blocks contained in X.
SubsetMask lower_approx(const ApproximationSpace& space, SubsetMask x);

// SH(X): union of the blocks meeting X.
SubsetMask upper_approx(const ApproximationSpace& space, SubsetMask x);

// A covering with positive capacities together with one matroid per block.
// By default slice i is k_rank_matroid(K_i, k_i); via_covering_matroid()
// swaps every slice for the covering matroid with all other capacities
// zeroed.
class MatroidalSpace {
 public:
  // Throws PreconditionError if any capacity is zero.
  explicit MatroidalSpace(CapacitatedCovering covering);

  const CapacitatedCovering& covering() const { return covering_; }
  const ApproximationSpace& space() const { return space_; }
  const GroundSet& ground() const { return covering_.ground(); }
  std::size_t block_count() const { return covering_.block_count(); }
  std::span<const Matroid> slices() const { return slices_; }

  MatroidalSpace via_covering_matroid() const;

 private:
  MatroidalSpace(CapacitatedCovering covering, std::vector<Matroid> slices);

  CapacitatedCovering covering_;
  ApproximationSpace space_;
  std::vector<Matroid> slices_;
};

// Complement of the closure of the empty set in slice i.
SubsetMask matroidal_block(const MatroidalSpace& ms, std::size_t i);

struct MembershipTriple {
  bool in_block = false;              // x in K_i
  bool singleton_independent = false; // {x} independent in slice i
  bool unit_rank = false;             // rank of {x} in slice i is 1

  bool coincide() const {
    return in_block == singleton_independent && singleton_independent == unit_rank;
  }
};

MembershipTriple matroidal_membership(const MatroidalSpace& ms, std::size_t x,
                                      std::size_t i);

// Intersection of matroidal_block(i) over the slices where {x} has rank 1.
SubsetMask matroidal_neighborhood(const MatroidalSpace& ms, std::size_t x);

// Union of matroidal_block(i) over the slices with r_i(X) == r_i(K_i).
// This is the formula exactly as stated; it overshoots SL(X) whenever some
// k_i < |K_i| and X meets K_i in at least k_i elements without containing
// it.
SubsetMask matroidal_lower(const MatroidalSpace& ms, SubsetMask x);

// Union of matroidal_block(i) over the slices with r_i(X) > 0.
SubsetMask matroidal_upper(const MatroidalSpace& ms, SubsetMask x);

// covering_matroid_slice of the underlying covering.
Matroid slice_via_covering_matroid(const MatroidalSpace& ms, std::size_t i);

}  // namespace covmat

#endif  // COVMAT_ROUGH_HPP_
