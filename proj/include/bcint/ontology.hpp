#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcint {

struct Concept {
  std::string id;
  std::string label;  // normalized
  std::optional<std::string> parent;

  bool operator==(const Concept&) const = default;
};

struct SynonymGroup {
  std::string concept_id;
  std::vector<std::string> terms;  // normalized, pairwise distinct

  bool operator==(const SynonymGroup&) const = default;
};

struct HomonymEntry {
  std::string term;                 // normalized
  std::vector<std::string> senses;  // >= 2 distinct concept ids, sorted

  bool operator==(const HomonymEntry&) const = default;
};

struct Thesaurus {
  std::vector<SynonymGroup> synonym_groups;
  std::vector<HomonymEntry> homonym_entries;
};

// Concept taxonomy plus thesaurus. Immutable once built; every accessor is a
// read-only lookup, so one instance may be shared across threads.
//
// Besides the structural rules (unique ids, acyclic parents, resolvable
// references, >= 2 senses per homonym) construction enforces:
//   - a term belongs to at most one synonym group;
//   - no term is both a synonym-group member and a homonym head;
//   - a concept whose label is a synonym-group term is that group's concept.
// The last rule makes every member of a group denote exactly the same concept
// set, which is what lets a leaf be renamed within its group without changing
// any similarity value.
class DomainOntology {
 public:
  DomainOntology() = default;

  // Normalizes labels and terms, then validates. Throws Error with kValidation,
  // kReference or kThesaurusConsistency.
  static DomainOntology create(std::vector<Concept> concepts, Thesaurus thesaurus);

  const std::vector<Concept>& concepts() const { return concepts_; }
  const Thesaurus& thesaurus() const { return thesaurus_; }

  const Concept* find_concept(std::string_view id) const;
  const SynonymGroup* synonym_group_of(std::string_view term) const;
  const HomonymEntry* homonym_entry_of(std::string_view term) const;
  // Ids of concepts whose label equals `term`, sorted.
  std::vector<std::string> concepts_labelled(std::string_view term) const;

 private:
  std::vector<Concept> concepts_;
  Thesaurus thesaurus_;
  std::map<std::string, std::size_t, std::less<>> concept_index_;
  std::map<std::string, std::size_t, std::less<>> synonym_index_;
  std::map<std::string, std::size_t, std::less<>> homonym_index_;
  std::multimap<std::string, std::size_t, std::less<>> label_index_;
};

// Ontology document; throws on any invariant violation.
DomainOntology load_domain_ontology(std::string_view document);

// Concept ids a normalized term can denote, sorted; empty iff the term is not in
// the ontology.
std::vector<std::string> term_concepts(std::string_view term, const DomainOntology& o);

bool in_ontology(std::string_view term, const DomainOntology& o);

// Both members of one synonym group (t1 == t2 included).
bool synonym_related(std::string_view t1, std::string_view t2, const DomainOntology& o);

// Same surface form, and that form heads a homonym entry.
bool homonym_related(std::string_view t1, std::string_view t2, const DomainOntology& o);

}  // namespace bcint
