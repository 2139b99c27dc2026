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

#include "covmat/matching.hpp"

#include <stdexcept>

namespace covmat {
namespace {

struct Scratch {
  std::span<const SubsetMask> blocks;
  std::vector<SubsetMask> members;  // block -> assigned elements
  std::vector<int> room;            // block -> remaining capacity
  std::vector<bool> visited;        // per augmentation
};

bool augment(Scratch& s, std::size_t element) {
  for (std::size_t j = 0; j < s.blocks.size(); ++j) {
    if (!s.blocks[j].contains(element) || s.visited[j]) continue;
    s.visited[j] = true;
    if (s.room[j] > 0) {
      --s.room[j];
      s.members[j] = s.members[j].with(element);
      return true;
    }
    bool moved = false;
    s.members[j].for_each([&](std::size_t other) {
      if (moved || !augment(s, other)) return;
      // `other` found room elsewhere; hand its slot in j to `element`.
      s.members[j] = s.members[j].without(other).with(element);
      moved = true;
    });
    if (moved) return true;
  }
  return false;
}

}  // namespace

BlockAssignment::BlockAssignment(std::vector<SubsetMask> blocks,
                                 std::vector<int> capacities)
    : blocks_(std::move(blocks)), capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw std::invalid_argument("one capacity per block is required");
  }
}

int BlockAssignment::max_assigned(SubsetMask x) const {
  Scratch s;
  s.blocks = blocks_;
  s.members.assign(blocks_.size(), SubsetMask{});
  s.room.resize(blocks_.size());
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    s.room[j] = capacities_[j] < 0 ? 0 : capacities_[j];
  }
  int assigned = 0;
  x.for_each([&](std::size_t e) {
    s.visited.assign(blocks_.size(), false);
    if (augment(s, e)) ++assigned;
  });
  return assigned;
}

}  // namespace covmat
