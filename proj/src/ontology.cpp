#include "bcint/ontology.hpp"

#include <algorithm>
#include <set>

#include "bcint/error.hpp"
#include "bcint/normalize.hpp"
#include "json_util.hpp"

namespace bcint {

DomainOntology DomainOntology::create(std::vector<Concept> concepts, Thesaurus thesaurus) {
  DomainOntology o;

  for (std::size_t i = 0; i < concepts.size(); ++i) {
    auto& c = concepts[i];
    if (c.id.empty()) throw Error(ErrorCode::kValidation, "concept with empty id");
    c.label = normalize(c.label);
    if (c.label.empty()) {
      throw Error(ErrorCode::kValidation, "concept '" + c.id + "' has an empty label");
    }
    if (!o.concept_index_.emplace(c.id, i).second) {
      throw Error(ErrorCode::kValidation, "duplicate concept id '" + c.id + "'");
    }
    o.label_index_.emplace(c.label, i);
  }
  for (const auto& c : concepts) {
    if (c.parent && !o.concept_index_.contains(*c.parent)) {
      throw Error(ErrorCode::kReference,
                  "concept '" + c.id + "' has unknown parent '" + *c.parent + "'");
    }
  }
  // Parent links must form a forest: walking up from any concept terminates
  // within |concepts| steps.
  for (const auto& c : concepts) {
    const Concept* cur = &c;
    std::size_t steps = 0;
    while (cur->parent) {
      if (++steps > concepts.size()) {
        throw Error(ErrorCode::kValidation, "taxonomy cycle through concept '" + c.id + "'");
      }
      cur = &concepts[o.concept_index_.find(*cur->parent)->second];
    }
  }

  for (std::size_t g = 0; g < thesaurus.synonym_groups.size(); ++g) {
    auto& group = thesaurus.synonym_groups[g];
    if (!o.concept_index_.contains(group.concept_id)) {
      throw Error(ErrorCode::kReference,
                  "synonym group refers to unknown concept '" + group.concept_id + "'");
    }
    std::set<std::string> local;
    for (auto& term : group.terms) {
      term = normalize(term);
      if (term.empty()) {
        throw Error(ErrorCode::kValidation,
                    "synonym group '" + group.concept_id + "' contains an empty term");
      }
      if (!local.insert(term).second) {
        throw Error(ErrorCode::kValidation, "synonym group '" + group.concept_id +
                                                "' lists term '" + term + "' twice");
      }
      if (!o.synonym_index_.emplace(term, g).second) {
        throw Error(ErrorCode::kThesaurusConsistency,
                    "term '" + term + "' appears in more than one synonym group");
      }
    }
  }

  for (std::size_t h = 0; h < thesaurus.homonym_entries.size(); ++h) {
    auto& entry = thesaurus.homonym_entries[h];
    entry.term = normalize(entry.term);
    if (entry.term.empty()) throw Error(ErrorCode::kValidation, "homonym entry with empty term");
    for (const auto& s : entry.senses) {
      if (!o.concept_index_.contains(s)) {
        throw Error(ErrorCode::kReference,
                    "homonym '" + entry.term + "' refers to unknown concept '" + s + "'");
      }
    }
    std::sort(entry.senses.begin(), entry.senses.end());
    entry.senses.erase(std::unique(entry.senses.begin(), entry.senses.end()), entry.senses.end());
    if (entry.senses.size() < 2) {
      throw Error(ErrorCode::kValidation,
                  "homonym '" + entry.term + "' needs at least 2 distinct senses");
    }
    if (o.synonym_index_.contains(entry.term)) {
      throw Error(ErrorCode::kThesaurusConsistency,
                  "term '" + entry.term + "' is both a synonym and a homonym");
    }
    if (!o.homonym_index_.emplace(entry.term, h).second) {
      throw Error(ErrorCode::kThesaurusConsistency,
                  "term '" + entry.term + "' has more than one homonym entry");
    }
  }

  for (const auto& c : concepts) {
    auto it = o.synonym_index_.find(c.label);
    if (it != o.synonym_index_.end() &&
        thesaurus.synonym_groups[it->second].concept_id != c.id) {
      throw Error(ErrorCode::kThesaurusConsistency,
                  "concept '" + c.id + "' is labelled '" + c.label +
                      "', a synonym of concept '" +
                      thesaurus.synonym_groups[it->second].concept_id + "'");
    }
  }

  o.concepts_ = std::move(concepts);
  o.thesaurus_ = std::move(thesaurus);
  return o;
}

const Concept* DomainOntology::find_concept(std::string_view id) const {
  auto it = concept_index_.find(id);
  return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

const SynonymGroup* DomainOntology::synonym_group_of(std::string_view term) const {
  auto it = synonym_index_.find(term);
  return it == synonym_index_.end() ? nullptr : &thesaurus_.synonym_groups[it->second];
}

const HomonymEntry* DomainOntology::homonym_entry_of(std::string_view term) const {
  auto it = homonym_index_.find(term);
  return it == homonym_index_.end() ? nullptr : &thesaurus_.homonym_entries[it->second];
}

std::vector<std::string> DomainOntology::concepts_labelled(std::string_view term) const {
  std::vector<std::string> out;
  auto [lo, hi] = label_index_.equal_range(term);
  for (auto it = lo; it != hi; ++it) out.push_back(concepts_[it->second].id);
  std::sort(out.begin(), out.end());
  return out;
}

DomainOntology load_domain_ontology(std::string_view document) {
  using detail::member;
  const auto root = detail::parse_json(document);
  detail::expect_object(root, "document");

  std::vector<Concept> concepts;
  if (const auto& arr = member(root, "concepts"); !arr.is_null()) {
    detail::expect_array(arr, "concepts");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "concepts[" + std::to_string(i) + "]";
      detail::expect_object(arr[i], where);
      Concept c;
      c.id = detail::required_string(arr[i], "id", where);
      c.label = detail::required_string(arr[i], "label", where);
      c.parent = detail::optional_string(arr[i], "parent", where);
      concepts.push_back(std::move(c));
    }
  }

  Thesaurus thesaurus;
  if (const auto& th = member(root, "thesaurus"); !th.is_null()) {
    detail::expect_object(th, "thesaurus");
    if (const auto& syn = member(th, "synonyms"); !syn.is_null()) {
      detail::expect_array(syn, "thesaurus.synonyms");
      for (std::size_t i = 0; i < syn.size(); ++i) {
        const std::string where = "thesaurus.synonyms[" + std::to_string(i) + "]";
        detail::expect_object(syn[i], where);
        SynonymGroup g;
        g.concept_id = detail::required_string(syn[i], "concept", where);
        const auto& terms = detail::expect_array(member(syn[i], "terms"), where + ".terms");
        for (std::size_t t = 0; t < terms.size(); ++t) {
          g.terms.push_back(
              detail::expect_string(terms[t], where + ".terms[" + std::to_string(t) + "]"));
        }
        thesaurus.synonym_groups.push_back(std::move(g));
      }
    }
    if (const auto& hom = member(th, "homonyms"); !hom.is_null()) {
      detail::expect_array(hom, "thesaurus.homonyms");
      for (std::size_t i = 0; i < hom.size(); ++i) {
        const std::string where = "thesaurus.homonyms[" + std::to_string(i) + "]";
        detail::expect_object(hom[i], where);
        HomonymEntry h;
        h.term = detail::required_string(hom[i], "term", where);
        const auto& senses = detail::expect_array(member(hom[i], "senses"), where + ".senses");
        for (std::size_t s = 0; s < senses.size(); ++s) {
          h.senses.push_back(
              detail::expect_string(senses[s], where + ".senses[" + std::to_string(s) + "]"));
        }
        thesaurus.homonym_entries.push_back(std::move(h));
      }
    }
  }

  return DomainOntology::create(std::move(concepts), std::move(thesaurus));
}

std::vector<std::string> term_concepts(std::string_view term, const DomainOntology& o) {
  std::vector<std::string> out = o.concepts_labelled(term);
  if (const auto* g = o.synonym_group_of(term)) out.push_back(g->concept_id);
  if (const auto* h = o.homonym_entry_of(term)) {
    out.insert(out.end(), h->senses.begin(), h->senses.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_ontology(std::string_view term, const DomainOntology& o) {
  return o.synonym_group_of(term) != nullptr || o.homonym_entry_of(term) != nullptr ||
         !o.concepts_labelled(term).empty();
}

bool synonym_related(std::string_view t1, std::string_view t2, const DomainOntology& o) {
  const auto* g1 = o.synonym_group_of(t1);
  return g1 != nullptr && g1 == o.synonym_group_of(t2);
}

bool homonym_related(std::string_view t1, std::string_view t2, const DomainOntology& o) {
  return t1 == t2 && o.homonym_entry_of(t1) != nullptr;
}

}  // namespace bcint
