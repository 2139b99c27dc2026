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

#include "covmat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "covmat/classify.hpp"
#include "covmat/constructions.hpp"
#include "covmat/document.hpp"
#include "covmat/errors.hpp"
#include "covmat/matroid.hpp"
#include "covmat/oracle.hpp"
#include "covmat/rough.hpp"

namespace covmat::cli {
namespace {

struct Options {
  std::string file;
  std::string set;
  std::string element;
  bool matroidal = false;
  bool verify = false;
  std::size_t max_enum = Limits{}.enumeration;
};

struct Context {
  const Options& opts;
  const CLI::App& command;
  InputDocument doc;
  GroundSet ground;
  Limits limits;
  std::ostream& out;
};

InputDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

SubsetMask parse_set(const GroundSet& ground, const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) labels.push_back(item);
  }
  return ground.subset(labels);
}

std::size_t parse_element(const GroundSet& ground, const std::string& label) {
  auto i = ground.index_of(label);
  if (!i) throw ValidationError("unknown element '" + label + "'");
  return *i;
}

SubsetMask required_set(const Context& c) {
  if (c.command.count("--set") == 0) throw ValidationError("--set is required");
  return parse_set(c.ground, c.opts.set);
}

void print_family(std::ostream& out, const SetFamily& family) {
  for (SubsetMask x : family) out << family.ground().format(x) << "\n";
}

std::string format_blocks(const GroundSet& ground, std::span<const SubsetMask> blocks) {
  std::vector<SubsetMask> sorted(blocks.begin(), blocks.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::string out;
  for (SubsetMask b : sorted) {
    if (!out.empty()) out += ' ';
    out += ground.format(b);
  }
  return out;
}

Matroid matroid_of(const InputDocument& doc) {
  switch (doc.kind) {
    case DocumentKind::kCovering: return covering_matroid(covering_of(doc));
    case DocumentKind::kPartition: return partition_matroid(partition_of(doc));
    case DocumentKind::kIndexedFamily: return transversal_matroid(family_of(doc));
  }
  throw PreconditionError("unknown document kind");
}

// The same matroid decided by the brute-force oracles only.
Matroid reference_of(const InputDocument& doc) {
  GroundSet ground = ground_of(doc);
  switch (doc.kind) {
    case DocumentKind::kCovering: {
      const CapacitatedCovering cov = covering_of(doc);
      std::vector<Matroid> slices;
      for (std::size_t i = 0; i < cov.block_count(); ++i) {
        slices.push_back(k_rank_matroid(ground, cov.blocks()[i], cov.capacities()[i]));
      }
      return Matroid(
          ground,
          [slices](SubsetMask x) { return oracle::bf_union_independent(slices, x); },
          "reference covering");
    }
    case DocumentKind::kPartition: {
      auto blocks = block_masks(doc, ground);
      std::vector<int> caps;
      for (const auto& b : doc.blocks) caps.push_back(b.k);
      return Matroid(
          ground,
          [blocks, caps](SubsetMask x) {
            for (std::size_t i = 0; i < blocks.size(); ++i) {
              if ((x & blocks[i]).size() > caps[i]) return false;
            }
            return true;
          },
          "reference partition");
    }
    case DocumentKind::kIndexedFamily: {
      IndexedFamily fam = family_of(doc);
      return Matroid(
          ground, [fam](SubsetMask x) { return oracle::bf_matching(fam, x); },
          "reference transversal");
    }
  }
  throw PreconditionError("unknown document kind");
}

void mismatch(const GroundSet& ground, SubsetMask at, const std::string& what) {
  throw VerificationError(what + " at " + ground.format(at), at.bits());
}

void expect_equal_families(const SetFamily& got, const SetFamily& want,
                           const std::string& what) {
  if (got == want) return;
  for (SubsetMask x : got) {
    if (!want.contains(x)) mismatch(got.ground(), x, what + ": unexpected member");
  }
  for (SubsetMask x : want) {
    if (!got.contains(x)) mismatch(got.ground(), x, what + ": missing member");
  }
}

void verified(std::ostream& out, const std::string& what) {
  out << "verify: OK (" << what << ")\n";
}

int cmd_axioms(Context& c) {
  const CapacitatedCovering cov = covering_of(c.doc);
  const SetFamily naive = naive_covering_family(cov, c.limits);
  const AxiomCertificate cert = check_independence_axioms(naive, c.limits);
  c.out << describe(cert, c.ground) << "\n";
  if (!c.opts.verify) return kOk;
  switch (cert.verdict) {
    case AxiomVerdict::kMatroid:
      if (!oracle::bf_is_matroid(naive)) {
        throw VerificationError("brute-force axiom check rejects the family", std::nullopt);
      }
      break;
    case AxiomVerdict::kViolatesI1:
      if (naive.contains(SubsetMask{})) mismatch(c.ground, SubsetMask{}, "I1 witness");
      break;
    case AxiomVerdict::kViolatesI2:
      if (!naive.contains(*cert.first) || naive.contains(*cert.second) ||
          !cert.second->subset_of(*cert.first)) {
        mismatch(c.ground, *cert.first, "I2 witness");
      }
      break;
    case AxiomVerdict::kViolatesI3: {
      const SubsetMask small = *cert.first;
      const SubsetMask large = *cert.second;
      bool ok = naive.contains(small) && naive.contains(large) && small.size() < large.size();
      (large - small).for_each([&](std::size_t u) { ok = ok && !naive.contains(small.with(u)); });
      if (!ok) mismatch(c.ground, large, "I3 witness");
      break;
    }
  }
  verified(c.out, "certificate re-checked against the family");
  return kOk;
}

int cmd_enumerate(Context& c, const std::string& what) {
  const Matroid m = matroid_of(c.doc);
  SetFamily result = what == "independents" ? independents(m, c.limits)
                     : what == "circuits"   ? circuits(m, c.limits)
                                            : bases(m, c.limits);
  print_family(c.out, result);
  if (!c.opts.verify) return kOk;
  const Matroid ref = reference_of(c.doc);
  SetFamily want = what == "independents" ? oracle::bf_independent_family(ref)
                   : what == "circuits"   ? oracle::bf_circuit_family(ref)
                                          : family_max(oracle::bf_independent_family(ref));
  expect_equal_families(result, want, what);
  verified(c.out, what + " match the brute-force oracle");
  return kOk;
}

int cmd_rank(Context& c) {
  const SubsetMask x = required_set(c);
  const Matroid m = matroid_of(c.doc);
  const int r = rank(m, x);
  c.out << r << "\n";
  if (!c.opts.verify) return kOk;
  if (oracle::bf_rank(reference_of(c.doc), x) != r) mismatch(c.ground, x, "rank");
  verified(c.out, "brute-force rank");
  return kOk;
}

int cmd_closure(Context& c) {
  const SubsetMask x = required_set(c);
  const Matroid m = matroid_of(c.doc);
  const SubsetMask cl = closure(m, x);
  c.out << c.ground.format(cl) << "\n";
  if (!c.opts.verify) return kOk;
  const Matroid ref = reference_of(c.doc);
  const int r = oracle::bf_rank(ref, x);
  SubsetMask want;
  for (std::size_t u = 0; u < c.ground.size(); ++u) {
    if (oracle::bf_rank(ref, x.with(u)) == r) want = want.with(u);
  }
  if (want != cl) mismatch(c.ground, want, "closure");
  verified(c.out, "closure from brute-force rank");
  return kOk;
}

int cmd_dual(Context& c) {
  const Matroid m = matroid_of(c.doc);
  const SetFamily dual_bases = bases(dual(m), c.limits);
  print_family(c.out, dual_bases);
  if (!c.opts.verify) return kOk;
  expect_equal_families(dual_bases, family_max(oracle::bf_dual_family(reference_of(c.doc))),
                        "dual bases");
  verified(c.out, "complements of brute-force bases");
  return kOk;
}

std::vector<std::string> approx_disagreements(const ApproximationSpace& space,
                                              const MatroidalSpace& ms, SubsetMask x) {
  std::vector<std::string> ops;
  if (matroidal_lower(ms, x) != lower_approx(space, x)) ops.push_back("SL");
  if (matroidal_upper(ms, x) != upper_approx(space, x)) ops.push_back("SH");
  return ops;
}

int cmd_approx(Context& c) {
  const SubsetMask x = required_set(c);
  const CapacitatedCovering cov = covering_of(c.doc);
  const ApproximationSpace space(cov);
  c.out << "SL = " << c.ground.format(lower_approx(space, x)) << "\n";
  c.out << "SH = " << c.ground.format(upper_approx(space, x)) << "\n";
  if (!c.opts.matroidal && !c.opts.verify) return kOk;

  const MatroidalSpace ms(cov);
  const auto ops = approx_disagreements(space, ms, x);
  if (c.opts.matroidal) {
    c.out << "matroidal SL = " << c.ground.format(matroidal_lower(ms, x)) << "\n";
    c.out << "matroidal SH = " << c.ground.format(matroidal_upper(ms, x)) << "\n";
    if (ops.empty()) {
      c.out << "AGREE\n";
    } else {
      c.out << "DISAGREE";
      for (const auto& op : ops) c.out << ' ' << op;
      c.out << "\n";
    }
  }
  if (!c.opts.verify) return kOk;
  if (!ops.empty()) mismatch(c.ground, x, "matroidal " + ops.front() + " differs from direct");
  const MatroidalSpace via = ms.via_covering_matroid();
  if (!approx_disagreements(space, via, x).empty()) {
    mismatch(c.ground, x, "covering-matroid slices differ from direct");
  }
  verified(c.out, "matroidal forms agree");
  return kOk;
}

int cmd_neighborhood(Context& c) {
  if (c.command.count("--element") == 0) throw ValidationError("--element is required");
  const std::size_t x = parse_element(c.ground, c.opts.element);
  const CapacitatedCovering cov = covering_of(c.doc);
  const ApproximationSpace space(cov);
  const SubsetMask n = neighborhood(space, x);
  c.out << "N(" << c.ground.label(x) << ") = " << c.ground.format(n) << "\n";
  if (!c.opts.verify) return kOk;
  const MatroidalSpace ms(cov);
  if (matroidal_neighborhood(ms, x) != n) mismatch(c.ground, n, "matroidal neighborhood");
  if (matroidal_neighborhood(ms.via_covering_matroid(), x) != n) {
    mismatch(c.ground, n, "neighborhood via covering-matroid slices");
  }
  verified(c.out, "matroidal neighborhood agrees");
  return kOk;
}

int cmd_classify(Context& c) {
  const Matroid m = matroid_of(c.doc);
  const ClassificationReport r = classify(m, c.limits);
  auto flag = [&](const char* name, bool v) {
    c.out << name << ": " << (v ? "true" : "false") << "\n";
  };
  flag("is_matroid", r.is_matroid);
  flag("is_2_circuit", r.is_2_circuit);
  flag("is_partition_circuit", r.is_partition_circuit);
  flag("is_double_circuit", r.is_double_circuit);
  flag("is_identically_self_dual", r.is_identically_self_dual);
  c.out << "circuit_sizes:";
  for (int s : r.circuit_size_multiset) c.out << ' ' << s;
  c.out << "\n";
  if (r.two_circuit_partition) {
    c.out << "2-circuit partition: "
          << format_blocks(c.ground, r.two_circuit_partition->blocks()) << "\n";
  }
  if (r.partition_circuit_partition) {
    c.out << "partition-circuit partition: "
          << format_blocks(c.ground, r.partition_circuit_partition->blocks()) << "\n";
  }
  if (!c.opts.verify) return kOk;
  const Matroid ref = reference_of(c.doc);
  const SetFamily ref_circuits = oracle::bf_circuit_family(ref);
  expect_equal_families(circuits(m, c.limits), ref_circuits, "circuits");
  const bool self_dual = oracle::bf_dual_family(ref) == oracle::bf_independent_family(ref);
  if (self_dual != r.is_identically_self_dual) {
    throw VerificationError("identically-self-dual flag disagrees with the oracle",
                            std::nullopt);
  }
  verified(c.out, "circuits and self-duality match the brute-force oracle");
  return kOk;
}

int cmd_convert(Context& c) {
  InputDocument converted;
  converted.universe = c.doc.universe;
  if (c.doc.kind == DocumentKind::kIndexedFamily) {
    const CapacitatedCovering cov = transversal_as_covering(family_of(c.doc));
    converted.kind = cov.is_partition() ? DocumentKind::kPartition : DocumentKind::kCovering;
    // Name each block after the first family member that produced it.
    for (std::size_t i = 0; i < cov.block_count(); ++i) {
      BlockSpec b;
      b.k = cov.capacities()[i];
      b.name = "rest";
      while (std::any_of(c.doc.blocks.begin(), c.doc.blocks.end(),
                         [&](const BlockSpec& s) { return s.name == b.name; })) {
        b.name += "_";
      }
      for (const auto& spec : c.doc.blocks) {
        if (c.ground.subset(spec.elements) == cov.blocks()[i]) {
          b.name = spec.name;
          break;
        }
      }
      cov.blocks()[i].for_each([&](std::size_t e) { b.elements.push_back(c.ground.label(e)); });
      converted.blocks.push_back(std::move(b));
    }
  } else {
    const auto fam = covering_as_transversal(covering_of(c.doc));
    if (!fam) {
      throw PreconditionError(
          "inapplicable: a covering converts to an indexed family only when every k is 1");
    }
    converted.kind = DocumentKind::kIndexedFamily;
    converted.blocks = c.doc.blocks;
  }
  c.out << render_document(converted);
  if (!c.opts.verify) return kOk;
  const Matroid before = reference_of(c.doc);
  const Matroid after = reference_of(converted);
  if (auto diff = first_difference(before, after, c.limits)) {
    mismatch(c.ground, *diff, "converted matroid");
  }
  verified(c.out, "same independent family before and after");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Matroids from coverings: constructions, duality, classification and "
               "covering-based approximations."};
  app.name("covmat");
  app.require_subcommand(1);

  const std::map<std::string, std::string> commands = {
      {"axioms", "Check the independence axioms on {X : |X & K_i| <= k_i}"},
      {"independents", "List the independent sets"},
      {"circuits", "List the circuits"},
      {"bases", "List the bases"},
      {"rank", "Rank of --set"},
      {"closure", "Closure of --set"},
      {"dual", "List the bases of the dual matroid"},
      {"approx", "Lower and upper approximations of --set"},
      {"neighborhood", "Neighborhood of --element"},
      {"classify", "2-circuit / partition-circuit / double-circuit / self-dual report"},
      {"convert", "Indexed family <-> covering with unit capacities"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opts.file, "Input document (format 1)")->required();
    sub->add_flag("--verify", opts.verify, "Re-check the result with brute-force oracles");
    sub->add_option("--max-enum", opts.max_enum, "Largest ground set for powerset scans")
        ->capture_default_str();
    if (name == "rank" || name == "closure" || name == "approx") {
      sub->add_option("--set", opts.set, "Comma-separated labels; \"\" for the empty set");
    }
    if (name == "approx") {
      sub->add_flag("--matroidal", opts.matroidal, "Also print the matroidal forms");
    }
    if (name == "neighborhood") {
      sub->add_option("--element", opts.element, "Element label");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "covmat: " << e.what() << "\n";
    return kInvalidInput;
  }

  const CLI::App* command = app.get_subcommands().front();
  const std::string name = command->get_name();
  try {
    InputDocument doc = load(opts.file);
    GroundSet ground = ground_of(doc);
    Limits limits;
    limits.enumeration = opts.max_enum;
    Context c{opts, *command, std::move(doc), std::move(ground), limits, out};
    if (name == "axioms") return cmd_axioms(c);
    if (name == "independents" || name == "circuits" || name == "bases") {
      return cmd_enumerate(c, name);
    }
    if (name == "rank") return cmd_rank(c);
    if (name == "closure") return cmd_closure(c);
    if (name == "dual") return cmd_dual(c);
    if (name == "approx") return cmd_approx(c);
    if (name == "neighborhood") return cmd_neighborhood(c);
    if (name == "classify") return cmd_classify(c);
    if (name == "convert") return cmd_convert(c);
    err << "covmat: unknown command '" << name << "'\n";
    return kInvalidInput;
  } catch (const VerificationError& e) {
    out << "verify: MISMATCH " << e.what() << "\n";
    err << "covmat: verification mismatch: " << e.what() << "\n";
    return kVerificationMismatch;
  } catch (const ValidationError& e) {
    err << "covmat: " << opts.file << ": " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SizeLimitError& e) {
    err << "covmat: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const PreconditionError& e) {
    err << "covmat: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace covmat::cli
