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

#include "covmat/universe.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "covmat/errors.hpp"

namespace covmat {

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw ValidationError("ground set must be non-empty");
  }
  if (labels.size() > kMaxElements) {
    throw ValidationError("ground set has " + std::to_string(labels.size()) +
                          " elements; at most 64 are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw ValidationError("empty element label");
    if (!seen.insert(l).second) {
      throw ValidationError("duplicate element label '" + l + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::letters(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                             : "e" + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(std::size_t index) const {
  return labels_->at(index);
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

SubsetMask GroundSet::subset(std::span<const std::string> labels) const {
  SubsetMask x;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw ValidationError("unknown element '" + l + "'");
    x = x.with(*i);
  }
  return x;
}

SubsetMask GroundSet::subset(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> ls(labels.begin(), labels.end());
  return subset(std::span<const std::string>(ls));
}

std::string GroundSet::format(SubsetMask x) const {
  std::vector<std::string_view> names;
  x.for_each([&](std::size_t i) { names.emplace_back(label(i)); });
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += ',';
    out += names[i];
  }
  out += '}';
  return out;
}

void require_enumerable(const GroundSet& ground, const Limits& limits,
                        std::string_view what) {
  if (ground.size() > limits.enumeration) {
    std::ostringstream msg;
    msg << what << ": ground set of " << ground.size()
        << " elements exceeds the enumeration cap of " << limits.enumeration;
    throw SizeLimitError(msg.str());
  }
}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetMask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  for (SubsetMask m : members_) {
    if (!ground_.holds(m)) {
      throw ValidationError("family member outside the ground set");
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw ValidationError("duplicate family member " + ground_.format(*dup));
  }
}

SetFamily SetFamily::deduplicated(GroundSet ground,
                                  std::vector<SubsetMask> members) {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily(std::move(ground), std::move(members));
}

bool SetFamily::contains(SubsetMask x) const {
  return std::binary_search(members_.begin(), members_.end(), x,
                            canonical_less);
}

SetFamily family_min(const SetFamily& family) {
  // Ascending cardinality: a member is minimal iff no kept member is a
  // proper subset of it (any smaller subset dominates via a minimal one).
  std::vector<SubsetMask> kept;
  for (SubsetMask x : family) {
    bool minimal = std::none_of(kept.begin(), kept.end(), [&](SubsetMask y) {
      return y.subset_of(x);
    });
    if (minimal) kept.push_back(x);
  }
  return SetFamily(SetFamily::Sorted{}, family.ground(), std::move(kept));
}

SetFamily family_max(const SetFamily& family) {
  std::vector<SubsetMask> kept;
  const auto members = family.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    bool maximal = std::none_of(kept.begin(), kept.end(), [&](SubsetMask y) {
      return it->subset_of(y);
    });
    if (maximal) kept.push_back(*it);
  }
  std::reverse(kept.begin(), kept.end());
  return SetFamily(SetFamily::Sorted{}, family.ground(), std::move(kept));
}

}  // namespace covmat
