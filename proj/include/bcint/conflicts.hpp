#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcint/align.hpp"
#include "bcint/ontology.hpp"
#include "bcint/transform.hpp"

namespace bcint {

enum class Verdict { kSynonymous, kHomonymNamingConflict, kEqual, kDifferent };

std::string_view to_string(Verdict v);

// One line of evidence: a matched child pair, or a child left without a
// counterpart (then exactly one side is set and sigma is 0).
struct Finding {
  std::optional<std::size_t> left_index;
  std::optional<std::size_t> right_index;
  std::string left;
  std::string right;
  Score sigma;
  Rule rule = Rule::kSyntactic;
};

struct PairVerdict {
  ComponentRef left;
  ComponentRef right;
  std::string left_label;  // normalized root labels
  std::string right_label;
  Verdict verdict = Verdict::kDifferent;
  int sigma_prime = 0;
  Score sigma;
  bool roots_synonym = false;
  Matching matching;
  std::vector<Finding> evidence;
};

struct VerdictCounts {
  std::size_t synonymous = 0;
  std::size_t homonym_naming_conflict = 0;
  std::size_t equal = 0;
  std::size_t different = 0;

  std::size_t total() const { return synonymous + homonym_naming_conflict + equal + different; }
  bool operator==(const VerdictCounts&) const = default;
};

struct ConflictReport {
  std::vector<PairVerdict> verdicts;
  VerdictCounts counts;

  bool has_conflicts() const { return counts.homonym_naming_conflict > 0; }
};

// The verdict for given root syntactic similarity, aggregate score and root
// relation. Exposed separately so the partition can be checked on its own.
Verdict decide_verdict(int sigma_prime, const Score& sigma, bool roots_synonym,
                       bool roots_outside_ontology);

// Pre: a and b come from different systems.
PairVerdict classify_pair(const ComponentOntology& a, const ComponentOntology& b,
                          const DomainOntology& o);

// One verdict per unordered cross-system pair, ordered by (left system, left
// name, right system, right name). Throws Error(kNothingToIntegrate) when fewer
// than two systems are declared.
ConflictReport build_report(const OntologySet& set, const DomainOntology& o);

VerdictCounts count_verdicts(const std::vector<PairVerdict>& verdicts);

}  // namespace bcint
