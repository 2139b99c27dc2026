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

// Brute-force reference implementations. They transcribe the definitions
// directly and deliberately share no code with the efficient paths (no
// greedy rank, no matching, no rank identity). Used by tests and by the
// CLI's --verify flag.

#ifndef COVMAT_ORACLE_HPP_
#define COVMAT_ORACLE_HPP_

#include <span>

#include "covmat/constructions.hpp"
#include "covmat/matroid.hpp"
#include "covmat/universe.hpp"

namespace covmat::oracle {

struct OracleLimits {
  std::size_t union_set = 12;      // |X| in bf_union_independent
  std::size_t union_matroids = 4;  // number of matroids in bf_union_independent
  std::size_t rank_set = 20;       // |X| in bf_rank
  std::size_t matching_set = 8;    // |T| in bf_matching
  std::size_t dual_ground = 16;    // n in bf_dual_family and the family scans
  std::size_t axiom_family = 4096; // |F| in bf_is_matroid
};

// Tries every map from X to matroid indices and checks each preimage.
bool bf_union_independent(std::span<const Matroid> matroids, SubsetMask x,
                          const OracleLimits& limits = {});

// Largest independent subset of X, found by scanning all subsets.
int bf_rank(const Matroid& m, SubsetMask x, const OracleLimits& limits = {});

// Tries every injection from T into the index set.
bool bf_matching(const IndexedFamily& family, SubsetMask t,
                 const OracleLimits& limits = {});

// All subsets of complements of bases, with bases found as the maximal
// members of the independent family.
SetFamily bf_dual_family(const Matroid& m, const OracleLimits& limits = {});

// {X : oracle(X)} by a full scan.
SetFamily bf_independent_family(const Matroid& m, const OracleLimits& limits = {});

// Minimal members of the complement of bf_independent_family.
SetFamily bf_circuit_family(const Matroid& m, const OracleLimits& limits = {});

// I1, I2 and I3 checked literally over all members and all pairs.
bool bf_is_matroid(const SetFamily& family, const OracleLimits& limits = {});

}  // namespace covmat::oracle

#endif  // COVMAT_ORACLE_HPP_
