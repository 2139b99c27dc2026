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

#include <algorithm>
#include <vector>

#include "covmat/errors.hpp"
#include "covmat/universe.hpp"
#include "support.hpp"

namespace covmat {
namespace {

using testing::F;
using testing::S;
using testing::formatted;

TEST_CASE("ground set labels and formatting") {
  GroundSet g({"b", "a", "c"});
  CHECK(g.size() == 3);
  CHECK(g.index_of("a") == 1u);
  CHECK_FALSE(g.index_of("z").has_value());
  // Members print sorted by label, not by index.
  CHECK(g.format(g.full()) == "{a,b,c}");
  CHECK(g.format(SubsetMask{}) == "{}");
  CHECK(g.subset({"c", "b"}) == SubsetMask(0b101));

  CHECK_THROWS_AS(GroundSet({}), ValidationError);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(GroundSet({""}), ValidationError);
  CHECK_THROWS_AS(g.subset({"z"}), ValidationError);
  CHECK(GroundSet::letters(30).label(29) == "e29");
}

TEST_CASE("canonical order is by size then by index list") {
  const GroundSet g = GroundSet::letters(4);
  std::vector<SubsetMask> all;
  for (std::uint64_t b = 0; b < 16; ++b) all.push_back(SubsetMask(b));
  std::sort(all.begin(), all.end(), canonical_less);
  std::vector<std::string> first;
  for (std::size_t i = 0; i < 9; ++i) first.push_back(g.format(all[i]));
  CHECK(first == std::vector<std::string>{"{}", "{a}", "{b}", "{c}", "{d}", "{a,b}",
                                          "{a,c}", "{a,d}", "{b,c}"});

  // for_each_subset_by_size walks the same order.
  std::vector<SubsetMask> walked;
  for_each_subset_by_size(g.full(), [&](SubsetMask x) {
    walked.push_back(x);
    return true;
  });
  CHECK(walked == all);
}

TEST_CASE("set families are sorted and reject duplicates") {
  const GroundSet g = GroundSet::letters(3);
  SetFamily f = F(g, {"bc", "a", ""});
  CHECK(formatted(f) == std::vector<std::string>{"{}", "{a}", "{b,c}"});
  CHECK(f.contains(S(g, "bc")));
  CHECK_FALSE(f.contains(S(g, "b")));
  CHECK_THROWS_AS(F(g, {"a", "a"}), ValidationError);
  CHECK(SetFamily::deduplicated(g, {S(g, "a"), S(g, "a")}).size() == 1);
  CHECK_THROWS_AS(SetFamily(g, {SubsetMask(0b1000)}), ValidationError);
}

TEST_CASE("Min and Max") {
  const GroundSet g = GroundSet::letters(3);
  const SetFamily empty(g, {});
  CHECK(family_min(empty).empty());
  CHECK(family_max(empty).empty());

  const SetFamily a = F(g, {"a", "ab", "bc"});
  CHECK(family_min(a) == F(g, {"a", "bc"}));
  CHECK(family_max(a) == F(g, {"ab", "bc"}));

  const SetFamily pairs = F(g, {"ab", "ac", "bc"});
  CHECK(family_min(pairs) == pairs);
  CHECK(family_max(pairs) == pairs);
}

TEST_CASE("Min and Max are antichains inside the family") {
  testing::Rng rng(7);
  const GroundSet g = GroundSet::letters(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SubsetMask> members;
    for (int i = 0; i < 8; ++i) members.push_back(rng.subset(g));
    const SetFamily f = SetFamily::deduplicated(g, members);
    for (const SetFamily& ext : {family_min(f), family_max(f)}) {
      for (SubsetMask x : ext) {
        CHECK(f.contains(x));
        for (SubsetMask y : ext) CHECK((x == y || !x.subset_of(y)));
      }
    }
    // Every member lies above some minimal and below some maximal member.
    for (SubsetMask x : f) {
      const auto lo = family_min(f);
      const auto hi = family_max(f);
      CHECK(std::any_of(lo.begin(), lo.end(), [&](SubsetMask m) { return m.subset_of(x); }));
      CHECK(std::any_of(hi.begin(), hi.end(), [&](SubsetMask m) { return x.subset_of(m); }));
    }
  }
}

TEST_CASE("Opp") {
  const GroundSet g1 = GroundSet::letters(1);
  auto opp = opp_predicate(F(g1, {""}));
  CHECK_FALSE(opp(SubsetMask{}));
  CHECK(opp(S(g1, "a")));

  const GroundSet g = GroundSet::letters(3);
  std::vector<SubsetMask> all;
  for (std::uint64_t b = 0; b < 8; ++b) all.push_back(SubsetMask(b));
  auto none = opp_predicate(SetFamily(g, all));
  for (SubsetMask x : all) CHECK_FALSE(none(x));

  auto ex2 = opp_predicate(F(g, {"", "a", "b", "c", "ab", "ac", "bc"}));
  for (SubsetMask x : all) CHECK(ex2(x) == (x == g.full()));
}

TEST_CASE("enumeration cap") {
  Limits small;
  small.enumeration = 3;
  CHECK_NOTHROW(require_enumerable(GroundSet::letters(3), small, "scan"));
  CHECK_THROWS_AS(require_enumerable(GroundSet::letters(4), small, "scan"), SizeLimitError);
}

}  // namespace
}  // namespace covmat
