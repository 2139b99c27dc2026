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

// Input documents, format version 1. Line oriented:
//
//   # comment
//   format: 1
//   kind: covering            (covering | partition | indexed_family)
//   universe: a b c
//   block K1: a b             (capacity defaults to 1)
//   block K2 k=2: b c
//
// Labels are separated by whitespace and/or commas. `format: 1` must be the
// first non-comment line. Blocks keep their order; for indexed families the
// same element list may appear under several names.

#ifndef COVMAT_DOCUMENT_HPP_
#define COVMAT_DOCUMENT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "covmat/constructions.hpp"
#include "covmat/errors.hpp"

namespace covmat {

enum class DocumentKind { kCovering, kPartition, kIndexedFamily };

std::string_view to_string(DocumentKind kind);

struct BlockSpec {
  std::string name;
  std::vector<std::string> elements;
  int k = 1;
  int line = 0;
};

struct InputDocument {
  DocumentKind kind = DocumentKind::kCovering;
  std::vector<std::string> universe;
  std::vector<BlockSpec> blocks;
};

// A ValidationError that knows the offending line (0 when the problem is
// not tied to one line).
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses and validates for the declared kind. Throws ParseError.
InputDocument parse_document(std::string_view text);

// Inverse of parse_document; parse_document(render_document(d)) == d up to
// line numbers.
std::string render_document(const InputDocument& doc);

GroundSet ground_of(const InputDocument& doc);
std::vector<SubsetMask> block_masks(const InputDocument& doc, const GroundSet& ground);

// Interpret the document. covering_of accepts covering and partition
// documents; partition_of only partitions; family_of accepts any kind.
CapacitatedCovering covering_of(const InputDocument& doc);
PartitionWitness partition_of(const InputDocument& doc);
IndexedFamily family_of(const InputDocument& doc);

}  // namespace covmat

#endif  // COVMAT_DOCUMENT_HPP_
