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

#include "covmat/rough.hpp"

#include "covmat/errors.hpp"

namespace covmat {
namespace {

void require_element(const GroundSet& ground, std::size_t x) {
  if (x >= ground.size()) {
    throw PreconditionError("element index " + std::to_string(x) +
                            " outside the ground set");
  }
}

void require_block(const MatroidalSpace& ms, std::size_t i) {
  if (i >= ms.block_count()) {
    throw PreconditionError("block index " + std::to_string(i + 1) +
                            " out of range 1.." + std::to_string(ms.block_count()));
  }
}

}  // namespace

ApproximationSpace::ApproximationSpace(GroundSet ground, std::vector<SubsetMask> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  // Reuse the covering validation; capacities are irrelevant here.
  (void)CapacitatedCovering(ground_, blocks_, std::vector<int>(blocks_.size(), 0));
}

ApproximationSpace::ApproximationSpace(const CapacitatedCovering& covering)
    : ground_(covering.ground()),
      blocks_(covering.blocks().begin(), covering.blocks().end()) {}

SubsetMask neighborhood(const ApproximationSpace& space, std::size_t x) {
  require_element(space.ground(), x);
  SubsetMask out = space.ground().full();
  for (SubsetMask k : space.blocks()) {
    if (k.contains(x)) out = out & k;
  }
  return out;
}

SubsetMask lower_approx(const ApproximationSpace& space, SubsetMask x) {
  SubsetMask out;
  for (SubsetMask k : space.blocks()) {
    if (k.subset_of(x)) out = out | k;
  }
  return out;
}

SubsetMask upper_approx(const ApproximationSpace& space, SubsetMask x) {
  SubsetMask out;
  for (SubsetMask k : space.blocks()) {
    if (k.intersects(x)) out = out | k;
  }
  return out;
}

MatroidalSpace::MatroidalSpace(CapacitatedCovering covering)
    : covering_(std::move(covering)), space_(covering_) {
  for (std::size_t i = 0; i < covering_.block_count(); ++i) {
    if (covering_.capacities()[i] <= 0) {
      throw PreconditionError("matroidal operators need positive capacities; block " +
                              std::to_string(i + 1) + " has k = 0");
    }
    slices_.push_back(k_rank_matroid(covering_.ground(), covering_.blocks()[i],
                                     covering_.capacities()[i]));
  }
}

MatroidalSpace::MatroidalSpace(CapacitatedCovering covering, std::vector<Matroid> slices)
    : covering_(std::move(covering)), space_(covering_), slices_(std::move(slices)) {}

MatroidalSpace MatroidalSpace::via_covering_matroid() const {
  std::vector<Matroid> slices;
  for (std::size_t i = 0; i < block_count(); ++i) {
    slices.push_back(covering_matroid_slice(covering_, i));
  }
  return MatroidalSpace(covering_, std::move(slices));
}

SubsetMask matroidal_block(const MatroidalSpace& ms, std::size_t i) {
  require_block(ms, i);
  return ms.ground().complement(loops(ms.slices()[i]));
}

MembershipTriple matroidal_membership(const MatroidalSpace& ms, std::size_t x,
                                      std::size_t i) {
  require_element(ms.ground(), x);
  require_block(ms, i);
  const Matroid& slice = ms.slices()[i];
  const SubsetMask single = SubsetMask::singleton(x);
  return {ms.covering().blocks()[i].contains(x), slice.is_independent(single),
          rank(slice, single) == 1};
}

SubsetMask matroidal_neighborhood(const MatroidalSpace& ms, std::size_t x) {
  require_element(ms.ground(), x);
  const SubsetMask single = SubsetMask::singleton(x);
  SubsetMask out = ms.ground().full();
  for (std::size_t i = 0; i < ms.block_count(); ++i) {
    if (rank(ms.slices()[i], single) == 1) out = out & matroidal_block(ms, i);
  }
  return out;
}

SubsetMask matroidal_lower(const MatroidalSpace& ms, SubsetMask x) {
  SubsetMask out;
  for (std::size_t i = 0; i < ms.block_count(); ++i) {
    const Matroid& slice = ms.slices()[i];
    const SubsetMask block = matroidal_block(ms, i);
    if (rank(slice, x) == rank(slice, block)) out = out | block;
  }
  return out;
}

SubsetMask matroidal_upper(const MatroidalSpace& ms, SubsetMask x) {
  SubsetMask out;
  for (std::size_t i = 0; i < ms.block_count(); ++i) {
    if (rank(ms.slices()[i], x) > 0) out = out | matroidal_block(ms, i);
  }
  return out;
}

Matroid slice_via_covering_matroid(const MatroidalSpace& ms, std::size_t i) {
  require_block(ms, i);
  return covering_matroid_slice(ms.covering(), i);
}

}  // namespace covmat
