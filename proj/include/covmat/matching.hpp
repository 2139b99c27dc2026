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

#ifndef COVMAT_MATCHING_HPP_
#define COVMAT_MATCHING_HPP_

#include <span>
#include <vector>

#include "covmat/universe.hpp"

namespace covmat {

// Bipartite b-matching between elements and blocks: element e may go to
// block j iff e is in blocks[j], and block j takes at most capacities[j]
// elements. Solved by augmenting paths; scratch state is per call, so one
// instance can serve concurrent queries.
class BlockAssignment {
 public:
  BlockAssignment(std::vector<SubsetMask> blocks, std::vector<int> capacities);

  // Size of a largest assignment of elements of x.
  int max_assigned(SubsetMask x) const;

  // True iff every element of x can be assigned.
  bool assigns_all(SubsetMask x) const { return max_assigned(x) == x.size(); }

  std::span<const SubsetMask> blocks() const { return blocks_; }
  std::span<const int> capacities() const { return capacities_; }

 private:
  std::vector<SubsetMask> blocks_;
  std::vector<int> capacities_;
};

}  // namespace covmat

#endif  // COVMAT_MATCHING_HPP_
