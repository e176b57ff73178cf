#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcint/conflicts.hpp"
#include "bcint/model.hpp"
#include "bcint/ontology.hpp"
#include "bcint/transform.hpp"

namespace bcint {

enum class CorrespondenceKind { kOneToOne, kOneToMany, kManyToOne, kManyToMany };
enum class Relation { kSynonym, kEqual };

std::string_view to_string(CorrespondenceKind kind);
std::string_view to_string(Relation relation);

// A component, or one element of a component when `element` is set.
struct ConceptRef {
  std::string system_id;
  std::string component;
  std::optional<std::string> element;

  auto operator<=>(const ConceptRef&) const = default;
};

struct Correspondence {
  CorrespondenceKind kind = CorrespondenceKind::kOneToOne;
  Relation relation = Relation::kEqual;
  std::vector<ConceptRef> left;
  std::vector<ConceptRef> right;
};

struct Alias {
  std::string system_id;
  std::string label;

  auto operator<=>(const Alias&) const = default;
};

struct CanonicalChild {
  std::string label;
  NodeKind node_kind = NodeKind::kAttribute;
  std::optional<std::string> value_type;
  std::vector<ConceptRef> aliases;
  bool kind_conflict = false;
  bool type_conflict = false;
};

// A merged concept. Unified groups and untouched components are plain
// canonical concepts; components caught in a homonym conflict are kept apart
// under a system-qualified label ("lib1.publication") with `qualified` set.
struct CanonicalConcept {
  std::string label;
  bool qualified = false;
  ComponentKind kind = ComponentKind::kEntity;
  bool kind_conflict = false;
  std::vector<Alias> aliases;
  std::vector<ComponentRef> sources;
  std::vector<CanonicalChild> children;
};

struct RepresentationOntology {
  std::vector<CanonicalConcept> canonical_concepts;  // sorted by label
  std::vector<Correspondence> correspondences;
  std::vector<PairVerdict> unresolved_conflicts;
};

// Unifies Equal/Synonymous pairs (transitively), qualifies every component
// involved in a homonym conflict, and leaves Different pairs alone.
// Throws Error(kConsistency) if the report names components missing from `set`.
RepresentationOntology build_representation(const ConflictReport& report, const OntologySet& set,
                                            const DomainOntology& o);

inline constexpr std::string_view kResultSystem = "result";

struct ExtractedComponents {
  ComponentSet set;
  std::vector<std::string> warnings;
};

// One component per merged concept, one element per unified child.
ExtractedComponents extract_result_components(const RepresentationOntology& r);

}  // namespace bcint
