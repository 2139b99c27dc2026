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

// Predicates for 2-circuit, partition-circuit, double-circuit and
// identically self-dual matroids. Every positive answer that comes with a
// partition is re-checked by rebuilding the matroid from that partition.
//
// The 2-circuit condition is a universal statement over circuits, so a
// matroid without circuits satisfies it. ClassificationReport keeps the
// circuit sizes so callers can tell that case apart.

#ifndef COVMAT_CLASSIFY_HPP_
#define COVMAT_CLASSIFY_HPP_

#include <optional>
#include <vector>

#include "covmat/constructions.hpp"
#include "covmat/matroid.hpp"

namespace covmat {

bool is_2_circuit(const Matroid& m, const Limits& limits = {});

// Classes of x ~ y iff x == y or {x, y} is a circuit, each with capacity 1.
// Elements on no circuit become singleton classes. Throws
// PreconditionError unless m is a 2-circuit matroid, and VerificationError
// (with the first differing subset) if the partition matroid of the
// classes differs from m.
PartitionWitness recover_partition_from_2circuit(const Matroid& m,
                                                 const Limits& limits = {});

struct PartitionCircuitResult {
  bool holds = false;
  // The circuits, as partition blocks, when `holds`.
  std::optional<PartitionWitness> witness;
};

PartitionCircuitResult is_partition_circuit(const Matroid& m, const Limits& limits = {});

// All circuits of m and of its dual have exactly two elements.
bool is_double_circuit(const Matroid& m, const Limits& limits = {});

struct ClassificationReport {
  bool is_matroid = true;
  bool is_2_circuit = false;
  bool is_partition_circuit = false;
  bool is_double_circuit = false;
  bool is_identically_self_dual = false;

  std::optional<PartitionWitness> two_circuit_partition;
  std::optional<PartitionWitness> partition_circuit_partition;
  std::vector<int> circuit_size_multiset;
};

// Throws VerificationError if the flags break an implication that must
// hold (double-circuit implies 2-circuit and identically self-dual).
ClassificationReport classify(const Matroid& m, const Limits& limits = {});

}  // namespace covmat

#endif  // COVMAT_CLASSIFY_HPP_
