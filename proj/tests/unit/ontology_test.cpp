#include "doctest.h"

#include "bcint/error.hpp"
#include "bcint/ontology.hpp"
#include "test_support.hpp"

using namespace bcint;
using namespace bcint::testing;

namespace {

ErrorCode load_error(const std::string& doc) {
  try {
    load_domain_ontology(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

using Ids = std::vector<std::string>;

}  // namespace

TEST_CASE("library ontology loads") {
  const auto o = library_ontology();
  CHECK(o.concepts().size() == 7);
  CHECK(o.thesaurus().synonym_groups.size() == 2);
  REQUIRE(o.thesaurus().homonym_entries.size() == 1);
  CHECK(o.thesaurus().homonym_entries[0].senses == Ids{"c_pub_any", "c_pub_periodical"});
  REQUIRE(o.find_concept("c_newspaper") != nullptr);
  CHECK(o.find_concept("c_newspaper")->parent == std::optional<std::string>("c_pub_periodical"));
}

TEST_CASE("empty ontology is valid") {
  const auto o = load_domain_ontology(R"({"concepts": [], "thesaurus": {"synonyms": [], "homonyms": []}})");
  CHECK(o.concepts().empty());
  CHECK(term_concepts("anything", o).empty());
  CHECK(load_domain_ontology("{}").concepts().empty());
}

TEST_CASE("load errors") {
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}],
      "thesaurus": {"homonyms": [{"term": "t", "senses": ["a"]}]}})") == ErrorCode::kValidation);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}, {"id": "b", "label": "b"}],
      "thesaurus": {"homonyms": [{"term": "t", "senses": ["a", "a"]}]}})") ==
        ErrorCode::kValidation);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a", "parent": "zz"}]})") ==
        ErrorCode::kReference);
  CHECK(load_error(R"({"concepts": [], "thesaurus": {"synonyms": [{"concept": "nope", "terms": ["x"]}]}})") ==
        ErrorCode::kReference);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}],
      "thesaurus": {"homonyms": [{"term": "t", "senses": ["a", "ghost"]}]}})") ==
        ErrorCode::kReference);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}, {"id": "b", "label": "b"}],
      "thesaurus": {"synonyms": [{"concept": "a", "terms": ["x", "y"]},
                                 {"concept": "b", "terms": ["Y", "z"]}]}})") ==
        ErrorCode::kThesaurusConsistency);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}, {"id": "b", "label": "b"}],
      "thesaurus": {"synonyms": [{"concept": "a", "terms": ["x", "y"]}],
                    "homonyms": [{"term": "x", "senses": ["a", "b"]}]}})") ==
        ErrorCode::kThesaurusConsistency);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}, {"id": "b", "label": "x"}],
      "thesaurus": {"synonyms": [{"concept": "a", "terms": ["x", "y"]}]}})") ==
        ErrorCode::kThesaurusConsistency);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a", "parent": "b"},
                                    {"id": "b", "label": "b", "parent": "a"}]})") ==
        ErrorCode::kValidation);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}, {"id": "a", "label": "b"}]})") ==
        ErrorCode::kValidation);
  CHECK(load_error(R"({"concepts": [{"id": "a", "label": "a"}],
      "thesaurus": {"synonyms": [{"concept": "a", "terms": ["x", "X "]}]}})") ==
        ErrorCode::kValidation);
  CHECK(load_error(R"({"concepts": [)") == ErrorCode::kParse);
}

TEST_CASE("term_concepts") {
  const auto o = library_ontology();
  CHECK(term_concepts("reader", o) == Ids{"c_person"});
  CHECK(term_concepts("person", o) == Ids{"c_person"});
  CHECK(term_concepts("publication", o) == Ids{"c_pub_any", "c_pub_periodical"});
  CHECK(term_concepts("zzz_unknown", o).empty());
  CHECK(term_concepts("newspaper", o) == Ids{"c_newspaper"});
}

TEST_CASE("synonym_related") {
  const auto o = library_ontology();
  CHECK(synonym_related("reading", "consulting", o));
  CHECK(synonym_related("reading", "reading", o));
  CHECK_FALSE(synonym_related("first name", "age", o));
  CHECK_FALSE(synonym_related("name", "name", o));
  CHECK_FALSE(synonym_related("reader", "reading", o));
}

TEST_CASE("homonym_related") {
  const auto o = library_ontology();
  CHECK(homonym_related("publication", "publication", o));
  CHECK_FALSE(homonym_related("publication", "reading", o));
  CHECK_FALSE(homonym_related("person", "person", o));
}

TEST_CASE("relations are symmetric and mutually exclusive on random thesauri") {
  Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto w = random_world(rng);
    for (const auto& a : w.vocabulary) {
      for (const auto& b : w.vocabulary) {
        const bool syn = synonym_related(a, b, w.ontology);
        const bool hom = homonym_related(a, b, w.ontology);
        CHECK(syn == synonym_related(b, a, w.ontology));
        CHECK(hom == homonym_related(b, a, w.ontology));
        CHECK_FALSE((syn && hom));
      }
      CHECK(term_concepts(a, w.ontology) == term_concepts(a, w.ontology));
      CHECK(in_ontology(a, w.ontology) == !term_concepts(a, w.ontology).empty());
    }
  }
}
