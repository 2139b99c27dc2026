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

// A matroid is a ground set plus an independence oracle. Everything else
// (rank, closure, circuits, bases, the dual) is derived from the oracle.
//
// Rank is computed greedily, which is only correct when the oracle really
// satisfies the independence axioms. Handles therefore come either from the
// constructions in constructions.hpp or from Matroid::from_family, which
// checks the axioms first.

#ifndef COVMAT_MATROID_HPP_
#define COVMAT_MATROID_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "covmat/universe.hpp"

namespace covmat {

class Matroid {
 public:
  using Oracle = std::function<bool(SubsetMask)>;
  using RankFunction = std::function<int(SubsetMask)>;

  // Throws PreconditionError if the oracle rejects the empty set. When a
  // rank hint is supplied it is audited against greedy rank on a fixed
  // sample of subsets when built with COVMAT_AUDIT_RANK_HINTS.
  Matroid(GroundSet ground, Oracle independent, std::string provenance,
          std::optional<RankFunction> rank_hint = std::nullopt);

  // Wraps an explicit family. Throws PreconditionError carrying the
  // axiom certificate's description if the family is not a matroid.
  static Matroid from_family(const SetFamily& independents,
                             const Limits& limits = {});

  const GroundSet& ground() const { return ground_; }
  const std::string& provenance() const { return provenance_; }

  bool is_independent(SubsetMask x) const {
    return ground_.holds(x) && independent_(x);
  }

  bool has_rank_hint() const { return rank_hint_.has_value(); }
  // Closed-form rank when the construction supplied one, greedy otherwise.
  int fast_rank(SubsetMask x) const;

 private:
  GroundSet ground_;
  Oracle independent_;
  std::string provenance_;
  std::optional<RankFunction> rank_hint_;
};

enum class AxiomVerdict { kMatroid, kViolatesI1, kViolatesI2, kViolatesI3 };

// Verdict of check_independence_axioms. For I2 `first` is the independent
// set I and `second` its dependent subset; for I3 `first` is the smaller set
// I1 and `second` the larger set I2 that cannot augment it.
struct AxiomCertificate {
  AxiomVerdict verdict = AxiomVerdict::kMatroid;
  std::optional<SubsetMask> first;
  std::optional<SubsetMask> second;

  bool is_matroid() const { return verdict == AxiomVerdict::kMatroid; }
};

AxiomCertificate check_independence_axioms(const SetFamily& family,
                                           const Limits& limits = {});

// One-line rendering such as "violates I3: I1={b}, I2={a,c}".
std::string describe(const AxiomCertificate& cert, const GroundSet& ground);

// Greedy rank: scan X in index order and keep every element that preserves
// independence.
int rank(const Matroid& m, SubsetMask x);

// {u in U : rank(X) == rank(X + u)}.
SubsetMask closure(const Matroid& m, SubsetMask x);

// The loops, i.e. closure of the empty set.
inline SubsetMask loops(const Matroid& m) { return closure(m, SubsetMask{}); }

SetFamily independents(const Matroid& m, const Limits& limits = {});
SetFamily circuits(const Matroid& m, const Limits& limits = {});
SetFamily bases(const Matroid& m, const Limits& limits = {});

// Independence in the dual is r*(X) = |X|, with
// r*(X) = |X| + r(U - X) - r(U).
Matroid dual(const Matroid& m);

// First subset (in canonical order) on which the two independence oracles
// disagree, or nullopt when the matroids are equal as set systems. Ground
// sets must have the same size.
std::optional<SubsetMask> first_difference(const Matroid& a, const Matroid& b,
                                           const Limits& limits = {});

inline bool same_independents(const Matroid& a, const Matroid& b,
                              const Limits& limits = {}) {
  return !first_difference(a, b, limits).has_value();
}

// mapping[i] is the element of the second ground set that element i of the
// first is sent to.
using Bijection = std::vector<std::size_t>;

std::optional<Bijection> find_isomorphism(const Matroid& a, const Matroid& b,
                                          const Limits& limits = {});

inline bool are_isomorphic(const Matroid& a, const Matroid& b,
                           const Limits& limits = {}) {
  return find_isomorphism(a, b, limits).has_value();
}

// True iff the independent families of M and its dual coincide.
bool is_identically_self_dual(const Matroid& m, const Limits& limits = {});

}  // namespace covmat

#endif  // COVMAT_MATROID_HPP_
