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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covmat/constructions.hpp"
#include "covmat/errors.hpp"
#include "covmat/oracle.hpp"
#include "support.hpp"

namespace covmat::oracle {
namespace {

using testing::F;
using testing::S;

std::vector<Matroid> slices_of(const CapacitatedCovering& cov) {
  std::vector<Matroid> out;
  for (std::size_t i = 0; i < cov.block_count(); ++i) {
    out.push_back(k_rank_matroid(cov.ground(), cov.blocks()[i], cov.capacities()[i]));
  }
  return out;
}

TEST_CASE("union oracle") {
  const auto ex = testing::two_block_covering();
  const auto ms = slices_of(ex);
  CHECK(bf_union_independent(ms, SubsetMask{}));
  CHECK(bf_union_independent(ms, S(ex.ground(), "ac")));
  CHECK_FALSE(bf_union_independent(ms, ex.ground().full()));

  const auto cd = testing::non_partition_covering();
  CHECK_FALSE(bf_union_independent(slices_of(cd), S(cd.ground(), "cd")));

  OracleLimits tight;
  tight.union_set = 1;
  CHECK_THROWS_AS(bf_union_independent(ms, S(ex.ground(), "ac"), tight), SizeLimitError);
}

TEST_CASE("rank oracle") {
  const Matroid m = covering_matroid(testing::two_block_covering());
  CHECK(bf_rank(m, SubsetMask{}) == 0);
  CHECK(bf_rank(m, m.ground().full()) == 2);
  const GroundSet g4 = GroundSet::letters(4);
  CHECK(bf_rank(k_rank_matroid(g4, S(g4, "bcd"), 1), S(g4, "cd")) == 1);
}

TEST_CASE("matching oracle") {
  const IndexedFamily fam = testing::six_element_family();
  const GroundSet& g = fam.ground();
  CHECK(bf_matching(fam, SubsetMask{}));
  CHECK(bf_matching(fam, S(g, "adf")));
  CHECK_FALSE(bf_matching(fam, S(g, "abcd")));
  CHECK(bf_matching(fam, S(g, "cd")));
  CHECK(bf_matching(fam, S(g, "cf")));
}

TEST_CASE("dual and family oracles") {
  const GroundSet g3 = GroundSet::letters(3);
  CHECK(bf_dual_family(testing::rank_zero_matroid(g3)).size() == 8);
  const Matroid u = covering_matroid(testing::two_block_covering());
  CHECK(bf_dual_family(u) == F(g3, {"", "a", "b", "c"}));
  CHECK(bf_circuit_family(u) == F(g3, {"abc"}));

  const GroundSet g4 = GroundSet::letters(4);
  const Matroid pm = partition_matroid(PartitionWitness::unit(g4, {S(g4, "ab"), S(g4, "cd")}));
  CHECK(bf_dual_family(pm) == bf_independent_family(pm));
}

TEST_CASE("literal axiom check") {
  const GroundSet g3 = GroundSet::letters(3);
  CHECK_FALSE(bf_is_matroid(F(g3, {"", "a", "b", "c", "ac"})));
  CHECK(bf_is_matroid(F(g3, {"", "a", "b", "c", "ab", "ac", "bc"})));
  CHECK_FALSE(bf_is_matroid(F(g3, {"a"})));
  CHECK_FALSE(bf_is_matroid(F(g3, {"", "ab"})));
}

TEST_CASE("oracles match the efficient paths") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 7));
    const Matroid m = testing::random_constructed_matroid(rng, n);
    CHECK(bf_is_matroid(bf_independent_family(m)) ==
          check_independence_axioms(bf_independent_family(m)).is_matroid());
  }
  // Random families, most of which are not matroids.
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSet g = GroundSet::letters(static_cast<std::size_t>(rng.uniform(1, 4)));
    std::vector<SubsetMask> members{SubsetMask{}};
    for (int i = 0; i < 5; ++i) members.push_back(rng.subset(g));
    const SetFamily f = SetFamily::deduplicated(g, members);
    CHECK(bf_is_matroid(f) == check_independence_axioms(f).is_matroid());
  }
}

}  // namespace
}  // namespace covmat::oracle
