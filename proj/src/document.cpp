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

#include "covmat/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace covmat {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_labels(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

BlockSpec parse_block(std::string_view head, std::string_view body, int line) {
  // head: "<name>" or "<name> k=<int>"
  BlockSpec b;
  b.line = line;
  const std::vector<std::string> words = split_labels(head);
  if (words.empty()) throw ParseError(line, "block needs a name");
  if (words.size() > 2) throw ParseError(line, "unexpected text in block header");
  b.name = words[0];
  if (!valid_label(b.name)) throw ParseError(line, "invalid block name '" + b.name + "'");
  if (words.size() == 2) {
    const std::string& kw = words[1];
    if (kw.rfind("k=", 0) != 0) throw ParseError(line, "expected k=<capacity>, got '" + kw + "'");
    const char* first = kw.data() + 2;
    const char* last = kw.data() + kw.size();
    auto [ptr, ec] = std::from_chars(first, last, b.k);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError(line, "capacity must be an integer, got '" + kw.substr(2) + "'");
    }
    if (b.k < 0) throw ParseError(line, "capacity must be non-negative");
  }
  b.elements = split_labels(body);
  return b;
}

void validate(const InputDocument& doc, int universe_line) {
  std::set<std::string> universe;
  for (const auto& l : doc.universe) {
    if (!valid_label(l)) throw ParseError(universe_line, "invalid label '" + l + "'");
    if (!universe.insert(l).second) {
      throw ParseError(universe_line, "duplicate label '" + l + "'");
    }
  }
  if (doc.universe.size() > GroundSet::kMaxElements) {
    throw ParseError(universe_line, "universe has more than 64 elements");
  }
  std::set<std::string> names;
  std::set<std::string> covered;
  std::set<std::set<std::string>> seen_blocks;
  for (const auto& b : doc.blocks) {
    if (!names.insert(b.name).second) {
      throw ParseError(b.line, "duplicate block name '" + b.name + "'");
    }
    std::set<std::string> members;
    for (const auto& e : b.elements) {
      if (!universe.count(e)) throw ParseError(b.line, "unknown element '" + e + "'");
      if (!members.insert(e).second) {
        throw ParseError(b.line, "element '" + e + "' listed twice");
      }
      if (doc.kind == DocumentKind::kPartition && covered.count(e)) {
        throw ParseError(b.line, "partition blocks overlap at '" + e + "'");
      }
    }
    if (doc.kind != DocumentKind::kIndexedFamily) {
      if (members.empty()) throw ParseError(b.line, "covering block is empty");
      if (!seen_blocks.insert(members).second) {
        throw ParseError(b.line, "duplicate covering block");
      }
    }
    covered.insert(members.begin(), members.end());
  }
  if (doc.kind != DocumentKind::kIndexedFamily) {
    if (doc.blocks.empty()) throw ParseError(0, "covering has no blocks");
    for (const auto& l : doc.universe) {
      if (!covered.count(l)) {
        throw ParseError(doc.blocks.back().line,
                         "blocks do not cover element '" + l + "'");
      }
    }
  }
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kCovering: return "covering";
    case DocumentKind::kPartition: return "partition";
    case DocumentKind::kIndexedFamily: return "indexed_family";
  }
  return {};
}

InputDocument parse_document(std::string_view text) {
  InputDocument doc;
  bool have_format = false;
  bool have_kind = false;
  int universe_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    if (!have_format) {
      if (key != "format") throw ParseError(line_no, "document must start with 'format: 1'");
      if (value != "1") {
        throw ParseError(line_no, "unsupported format version '" + std::string(value) + "'");
      }
      have_format = true;
      continue;
    }
    if (key == "format") {
      throw ParseError(line_no, "repeated format line");
    } else if (key == "kind") {
      if (have_kind) throw ParseError(line_no, "repeated kind line");
      if (value == "covering") doc.kind = DocumentKind::kCovering;
      else if (value == "partition") doc.kind = DocumentKind::kPartition;
      else if (value == "indexed_family") doc.kind = DocumentKind::kIndexedFamily;
      else throw ParseError(line_no, "unknown kind '" + std::string(value) + "'");
      have_kind = true;
    } else if (key == "universe") {
      if (universe_line != 0) throw ParseError(line_no, "repeated universe line");
      doc.universe = split_labels(value);
      if (doc.universe.empty()) throw ParseError(line_no, "universe must be non-empty");
      universe_line = line_no;
    } else if (key.rfind("block", 0) == 0 &&
               (key.size() == 5 || key[5] == ' ' || key[5] == '\t')) {
      if (universe_line == 0) throw ParseError(line_no, "block before universe");
      doc.blocks.push_back(parse_block(key.substr(5), value, line_no));
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_format) throw ParseError(0, "empty document; expected 'format: 1'");
  if (!have_kind) throw ParseError(0, "missing 'kind:' line");
  if (universe_line == 0) throw ParseError(0, "missing 'universe:' line");
  validate(doc, universe_line);
  return doc;
}

std::string render_document(const InputDocument& doc) {
  std::ostringstream out;
  out << "format: 1\n";
  out << "kind: " << to_string(doc.kind) << "\n";
  out << "universe:";
  for (const auto& l : doc.universe) out << ' ' << l;
  out << "\n";
  for (const auto& b : doc.blocks) {
    out << "block " << b.name;
    if (b.k != 1) out << " k=" << b.k;
    out << ":";
    for (const auto& e : b.elements) out << ' ' << e;
    out << "\n";
  }
  return out.str();
}

GroundSet ground_of(const InputDocument& doc) { return GroundSet(doc.universe); }

std::vector<SubsetMask> block_masks(const InputDocument& doc, const GroundSet& ground) {
  std::vector<SubsetMask> out;
  for (const auto& b : doc.blocks) out.push_back(ground.subset(b.elements));
  return out;
}

CapacitatedCovering covering_of(const InputDocument& doc) {
  if (doc.kind == DocumentKind::kIndexedFamily) {
    throw PreconditionError("a covering or partition document is required");
  }
  GroundSet ground = ground_of(doc);
  std::vector<int> caps;
  for (const auto& b : doc.blocks) caps.push_back(b.k);
  auto blocks = block_masks(doc, ground);
  return CapacitatedCovering(std::move(ground), std::move(blocks), std::move(caps));
}

PartitionWitness partition_of(const InputDocument& doc) {
  if (doc.kind != DocumentKind::kPartition) {
    throw PreconditionError("a partition document is required");
  }
  return PartitionWitness(covering_of(doc));
}

IndexedFamily family_of(const InputDocument& doc) {
  GroundSet ground = ground_of(doc);
  auto blocks = block_masks(doc, ground);
  return IndexedFamily(std::move(ground), std::move(blocks));
}

}  // namespace covmat
