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

#include "covmat/classify.hpp"

#include <algorithm>
#include <numeric>

#include "covmat/errors.hpp"

namespace covmat {
namespace {

bool all_of_size(const SetFamily& family, int size) {
  return std::all_of(family.begin(), family.end(),
                     [size](SubsetMask c) { return c.size() == size; });
}

void verify_regenerates(const Matroid& built, const Matroid& original,
                        const Limits& limits, const char* what) {
  if (auto diff = first_difference(built, original, limits)) {
    throw VerificationError(std::string(what) + " differs from the matroid on " +
                                original.ground().format(*diff),
                            diff->bits());
  }
}

// Union-find over at most 64 elements.
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool is_2_circuit(const Matroid& m, const Limits& limits) {
  return all_of_size(circuits(m, limits), 2);
}

PartitionWitness recover_partition_from_2circuit(const Matroid& m, const Limits& limits) {
  const SetFamily cs = circuits(m, limits);
  if (!all_of_size(cs, 2)) {
    throw PreconditionError("not a 2-circuit matroid");
  }
  const std::size_t n = m.ground().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (SubsetMask c : cs) {
    const auto ends = c.indices();
    parent[find_root(parent, ends[0])] = find_root(parent, ends[1]);
  }
  // The union-find closure is transitive; ~ itself must already be, i.e.
  // every pair inside a class has to be a circuit.
  std::vector<SubsetMask> classes(n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t r = find_root(parent, e);
    classes[r] = classes[r].with(e);
  }
  std::erase_if(classes, [](SubsetMask c) { return c.empty(); });
  for (SubsetMask cls : classes) {
    for_each_subset_by_size(cls, [&](SubsetMask pair) {
      if (pair.size() < 2) return true;
      if (pair.size() > 2) return false;
      if (!cs.contains(pair)) {
        throw VerificationError("circuit relation is not transitive at " +
                                    m.ground().format(pair),
                                pair.bits());
      }
      return true;
    });
  }
  std::sort(classes.begin(), classes.end(), [](SubsetMask a, SubsetMask b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  PartitionWitness witness = PartitionWitness::unit(m.ground(), std::move(classes));
  verify_regenerates(partition_matroid(witness), m, limits, "partition matroid of the classes");
  return witness;
}

PartitionCircuitResult is_partition_circuit(const Matroid& m, const Limits& limits) {
  const SetFamily cs = circuits(m, limits);
  SubsetMask seen;
  for (SubsetMask c : cs) {
    if (c.intersects(seen)) return {};
    seen = seen | c;
  }
  if (cs.empty() || seen != m.ground().full()) return {};
  std::vector<SubsetMask> blocks(cs.begin(), cs.end());
  std::sort(blocks.begin(), blocks.end(), [](SubsetMask a, SubsetMask b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  PartitionWitness witness = PartitionWitness::unit(m.ground(), std::move(blocks));
  verify_regenerates(partition_circuit_matroid(witness), m, limits,
                     "partition-circuit matroid of the circuits");
  return {true, std::move(witness)};
}

bool is_double_circuit(const Matroid& m, const Limits& limits) {
  return is_2_circuit(m, limits) && is_2_circuit(dual(m), limits);
}

ClassificationReport classify(const Matroid& m, const Limits& limits) {
  ClassificationReport report;
  const SetFamily cs = circuits(m, limits);
  for (SubsetMask c : cs) report.circuit_size_multiset.push_back(c.size());
  std::sort(report.circuit_size_multiset.begin(), report.circuit_size_multiset.end());

  report.is_2_circuit = all_of_size(cs, 2);
  if (report.is_2_circuit) {
    report.two_circuit_partition = recover_partition_from_2circuit(m, limits);
  }
  PartitionCircuitResult pc = is_partition_circuit(m, limits);
  report.is_partition_circuit = pc.holds;
  report.partition_circuit_partition = std::move(pc.witness);
  report.is_double_circuit = report.is_2_circuit && is_2_circuit(dual(m), limits);
  report.is_identically_self_dual = is_identically_self_dual(m, limits);

  if (report.is_double_circuit &&
      !(report.is_2_circuit && report.is_identically_self_dual)) {
    throw VerificationError("double-circuit matroid is not identically self-dual",
                            std::nullopt);
  }
  return report;
}

}  // namespace covmat
