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

// Ground sets, subsets and explicit set families.
//
// Elements are addressed by index 0..n-1 everywhere inside the library;
// labels only matter when parsing or printing. A subset is a 64-bit mask,
// so a ground set holds at most 64 elements. Anything that scans a powerset
// additionally checks the enumeration cap in Limits.

#ifndef COVMAT_UNIVERSE_HPP_
#define COVMAT_UNIVERSE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covmat {

struct Limits {
  // Largest ground set on which a full powerset scan is allowed.
  std::size_t enumeration = 22;
  // Largest ground set for the permutation search in are_isomorphic.
  std::size_t isomorphism = 8;
};

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask singleton(std::size_t index) {
    return SubsetMask(std::uint64_t{1} << index);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(std::size_t index) const {
    return index < 64 && ((bits_ >> index) & 1U) != 0;
  }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr SubsetMask with(std::size_t index) const {
    return SubsetMask(bits_ | (std::uint64_t{1} << index));
  }
  constexpr SubsetMask without(std::size_t index) const {
    return SubsetMask(bits_ & ~(std::uint64_t{1} << index));
  }

  // Element indices in increasing order.
  std::vector<std::size_t> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: by cardinality, then lexicographically on the increasing
// index lists.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Below the lowest differing index both lists agree; whichever set owns
  // that index has the smaller next entry.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

class GroundSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  // Throws ValidationError on an empty list, duplicate or empty labels, or
  // more than kMaxElements labels.
  explicit GroundSet(std::vector<std::string> labels);

  // "a", "b", ... for n <= 26, otherwise "e0", "e1", ...
  static GroundSet letters(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t index) const;
  std::span<const std::string> labels() const { return *labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  SubsetMask full() const {
    return SubsetMask(size() == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << size()) - 1);
  }
  SubsetMask complement(SubsetMask x) const { return full() - x; }
  bool holds(SubsetMask x) const { return x.subset_of(full()); }

  // Builds a mask from labels; throws ValidationError on an unknown label.
  SubsetMask subset(std::span<const std::string> labels) const;
  SubsetMask subset(std::initializer_list<std::string_view> labels) const;

  // "{a,c}" with members sorted by label; "{}" for the empty set.
  std::string format(SubsetMask x) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Throws SizeLimitError when a powerset scan over `ground` exceeds the cap.
void require_enumerable(const GroundSet& ground, const Limits& limits,
                        std::string_view what);

// Visits the subsets of `within` in increasing cardinality, and in canonical
// order inside each cardinality. Stops early when `fn` returns false.
template <typename Fn>
void for_each_subset_by_size(SubsetMask within, Fn&& fn) {
  const std::vector<std::size_t> elems = within.indices();
  const std::size_t n = elems.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      SubsetMask x;
      for (std::size_t p : pick) x = x.with(elems[p]);
      if (!fn(x)) return;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

// A duplicate-free family of subsets of one ground set, kept in canonical
// order so that equality is a structural comparison.
class SetFamily {
 public:
  // Throws ValidationError on duplicates or members outside the ground set.
  SetFamily(GroundSet ground, std::vector<SubsetMask> members);

  // Same as the constructor but silently drops duplicates.
  static SetFamily deduplicated(GroundSet ground,
                                std::vector<SubsetMask> members);

  const GroundSet& ground() const { return ground_; }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SubsetMask x) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  struct Sorted {};
  SetFamily(Sorted, GroundSet ground, std::vector<SubsetMask> members)
      : ground_(std::move(ground)), members_(std::move(members)) {}

  GroundSet ground_;
  std::vector<SubsetMask> members_;

  friend SetFamily family_min(const SetFamily&);
  friend SetFamily family_max(const SetFamily&);
};

// The inclusion-minimal members.
SetFamily family_min(const SetFamily& family);
// The inclusion-maximal members.
SetFamily family_max(const SetFamily& family);

// Membership test for the complement of a family inside the powerset. The
// complement itself is never materialized.
class OppPredicate {
 public:
  explicit OppPredicate(SetFamily family) : family_(std::move(family)) {}
  bool operator()(SubsetMask x) const {
    return family_.ground().holds(x) && !family_.contains(x);
  }

 private:
  SetFamily family_;
};

inline OppPredicate opp_predicate(SetFamily family) {
  return OppPredicate(std::move(family));
}

}  // namespace covmat

#endif  // COVMAT_UNIVERSE_HPP_
