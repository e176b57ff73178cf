#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "bcint/align.hpp"
#include "bcint/align_oracle.hpp"
#include "bcint/error.hpp"
#include "test_support.hpp"

using namespace bcint;
using namespace bcint::testing;

namespace {

DomainOntology empty_ontology() { return DomainOntology::create({}, {}); }

// Reference assignment: pad to a square, try every permutation, keep the best
// weight and among those the smallest pair sequence.
Matching enumerate_matching(const std::vector<std::vector<Score>>& cells) {
  const std::size_t rows = cells.size();
  const std::size_t cols = rows == 0 ? 0 : cells.front().size();
  if (rows == 0 || cols == 0) return {};
  const std::size_t n = std::max(rows, cols);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Score best(-1);
  Matching best_pairs;
  do {
    Score sum(0);
    Matching pairs;
    for (std::size_t i = 0; i < rows; ++i) {
      if (perm[i] >= cols) continue;
      sum += cells[i][perm[i]];
      pairs.emplace_back(i, perm[i]);
    }
    if (sum > best || (sum == best && pairs < best_pairs)) {
      best = sum;
      best_pairs = pairs;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_pairs;
}

Score matching_weight(const std::vector<std::vector<Score>>& cells, const Matching& m) {
  Score sum(0);
  for (auto [i, j] : m) sum += cells[i][j];
  return sum;
}

ComponentOntology with_children(std::string name, const std::vector<std::string>& labels) {
  ComponentOntology c;
  c.source = {"S", name};
  c.root = {std::move(name), NodeKind::kComponent, {}, {}};
  for (const auto& l : labels) c.root.children.push_back({l, NodeKind::kAttribute, {}, {}});
  return c;
}

}  // namespace

TEST_CASE("syntactic similarity") {
  CHECK(syntactic_similarity("Name", " name ") == 1);
  CHECK(syntactic_similarity("reading()", "reading") == 1);
  CHECK(syntactic_similarity("first name", "name") == 0);
  CHECK(syntactic_similarity("", "") == 1);
}

TEST_CASE("atomic semantic similarity on the library thesaurus") {
  const auto o = library_ontology();
  CHECK(semantic_similarity_atomic("reading", "consulting ()", o) == 1);
  CHECK(judge_atomic("reading", "consulting", o).rule == Rule::kSynonym);
  CHECK(semantic_similarity_atomic("Person", "reader", o) == 1);
  CHECK(semantic_similarity_atomic("publication", "publication", o) == 0);
  CHECK(judge_atomic("publication", "publication", o).rule == Rule::kHomonym);
  CHECK(semantic_similarity_atomic("first name", "name", o) == 0);
  CHECK(judge_atomic("name", "name", o).rule == Rule::kSyntactic);
  CHECK(semantic_similarity_atomic("name", "Name", o) == 1);
  CHECK(judge_atomic("person", "reading", o).rule == Rule::kDistinctConcepts);
  CHECK(judge_atomic("book", "publication", o).rule == Rule::kDistinctConcepts);
  CHECK(judge_atomic("periodical publication", "publication", o).rule == Rule::kSharedConcept);
  CHECK(semantic_similarity_atomic("newspaper", "newspaper", o) == 1);
}

TEST_CASE("Person against Reader gives the identity matrix") {
  const auto set = library_components();
  const auto o = library_ontology();
  const auto r = aggregate_similarity(
      transform_bc_to_ontology(find_component(set, "Lib1", "Person")),
      transform_bc_to_ontology(find_component(set, "Lib2", "Reader")), o);
  REQUIRE(r.matrix.rows() == 4);
  REQUIRE(r.matrix.cols() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(r.matrix.at(i, j) == Score(i == j ? 1 : 0));
  }
  CHECK(r.score == Score(1));
  CHECK(r.matching == Matching{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("the two Publication components score 2/3") {
  const auto set = library_components();
  const auto r = aggregate_similarity(
      transform_bc_to_ontology(find_component(set, "Lib1", "Publication")),
      transform_bc_to_ontology(find_component(set, "Lib2", "Publication")), library_ontology());
  CHECK(r.score == Score(2, 3));
  CHECK(r.matching == Matching{{0, 0}, {1, 1}});
}

TEST_CASE("client against client scores 1/2") {
  const auto o = load_domain_ontology(read_data("client/empty.onto.json"));
  const auto a = transform_component_set(parse_component_set(read_data("client/s1.json")));
  const auto b = transform_component_set(parse_component_set(read_data("client/s2.json")));
  CHECK(aggregate_similarity(a.ontologies[0], b.ontologies[0], o).score == Score(1, 2));
}

TEST_CASE("childless components score by their labels") {
  const auto o = library_ontology();
  CHECK(aggregate_similarity(with_children("person", {}), with_children("reader", {}), o).score ==
        Score(1));
  CHECK(aggregate_similarity(with_children("a", {}), with_children("b", {}), o).score ==
        Score(0));
  CHECK(aggregate_similarity(with_children("a", {}), with_children("a", {"x"}), o).score ==
        Score(0));
}

TEST_CASE("one missing child gives (n-1)/n") {
  const auto o = empty_ontology();
  for (std::int64_t n = 1; n <= 12; ++n) {
    std::vector<std::string> labels;
    for (std::int64_t k = 0; k < n; ++k) labels.push_back("t" + std::to_string(k));
    auto shorter = labels;
    shorter.erase(shorter.begin() + n / 2);
    CHECK(aggregate_similarity(with_children("a", labels), with_children("b", shorter), o)
              .score == Score(n - 1, n));
  }
}

TEST_CASE("max_weight_matching agrees with enumeration") {
  Rng rng(5);
  for (int round = 0; round < 600; ++round) {
    const std::size_t rows = uniform(rng, 0, 6);
    const std::size_t cols = uniform(rng, 0, 6);
    const std::int64_t denom = static_cast<std::int64_t>(uniform(rng, 1, 4));
    std::vector<std::vector<Score>> cells(rows, std::vector<Score>(cols));
    for (auto& row : cells) {
      for (auto& c : row) c = Score(static_cast<std::int64_t>(uniform(rng, 0, denom)), denom);
    }
    const auto got = max_weight_matching(cells);
    const auto want = enumerate_matching(cells);
    CHECK(matching_weight(cells, got) == matching_weight(cells, want));
    CHECK(got == want);
    CHECK(got.size() == std::min(rows, cols));
  }
}

TEST_CASE("aggregate agrees with the brute-force oracle") {
  Rng rng(17);
  for (int round = 0; round < 400; ++round) {
    const auto w = random_world(rng);
    const bool nested = coin(rng);
    const auto a = random_component(rng, w, "A", "a", 7, true, nested);
    const auto b = random_component(rng, w, "B", "b", 7, true, nested);
    CHECK(aggregate_similarity(a, b, w.ontology).score == brute_force_aggregate(a, b, w.ontology));
  }
}

TEST_CASE("oracle refuses oversized inputs") {
  std::vector<std::string> many;
  for (int k = 0; k < 9; ++k) many.push_back("t" + std::to_string(k));
  try {
    brute_force_aggregate(with_children("a", many), with_children("b", {"t0"}), empty_ontology());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOracleSize);
  }
}

TEST_CASE("aggregate is symmetric and bounded") {
  Rng rng(23);
  for (int round = 0; round < 400; ++round) {
    const auto w = random_world(rng);
    const auto a = random_component(rng, w, "A", "a", 8, true, coin(rng));
    const auto b = random_component(rng, w, "B", "b", 8, true, coin(rng));
    const auto ab = aggregate_similarity(a, b, w.ontology);
    const auto ba = aggregate_similarity(b, a, w.ontology);
    CHECK(ab.score == ba.score);
    CHECK(ab.score >= Score(0));
    CHECK(ab.score <= Score(1));
  }
}

TEST_CASE("a perfect score means equal counts and an all-ones matching") {
  Rng rng(29);
  int perfect = 0;
  for (int round = 0; round < 1500; ++round) {
    const auto w = random_world(rng);
    const auto a = random_component(rng, w, "A", "a", 4, true, false);
    const auto b = random_component(rng, w, "B", "b", 4, true, false);
    const auto r = aggregate_similarity(a, b, w.ontology);
    if (r.score != Score(1)) continue;
    ++perfect;
    CHECK(a.root.children.size() == b.root.children.size());
    for (auto [i, j] : r.matching) CHECK(r.matrix.at(i, j) == Score(1));
  }
  CHECK(perfect > 0);
}

TEST_CASE("reflexive without homonym leaves, not with them") {
  Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto w = random_world(rng);
    const auto a = random_component(rng, w, "A", "a", 8, false, coin(rng));
    CHECK(aggregate_similarity(a, a, w.ontology).score == Score(1));
  }
  const auto o = library_ontology();
  const auto pub = with_children("x", {"publication"});
  CHECK(aggregate_similarity(pub, pub, o).score == Score(0));
}

TEST_CASE("renaming a leaf within its synonym group keeps the score") {
  Rng rng(37);
  int renamed = 0;
  for (int round = 0; round < 600; ++round) {
    const auto w = random_world(rng);
    auto a = random_component(rng, w, "A", "a", 6, true, false);
    const auto b = random_component(rng, w, "B", "b", 6, true, false);
    const Score before = aggregate_similarity(a, b, w.ontology).score;
    for (auto& child : a.root.children) {
      for (const auto& g : w.groups) {
        if (std::find(g.begin(), g.end(), child.label) == g.end()) continue;
        for (const auto& t : g) {
          const bool taken = std::any_of(a.root.children.begin(), a.root.children.end(),
                                         [&](const auto& c) { return c.label == t; });
          if (!taken) {
            child.label = t;
            ++renamed;
            break;
          }
        }
      }
    }
    CHECK(aggregate_similarity(a, b, w.ontology).score == before);
  }
  CHECK(renamed > 0);
}

TEST_CASE("nested children are scored recursively") {
  const auto o = empty_ontology();
  ComponentOntology a = with_children("a", {"x"});
  ComponentOntology b = with_children("b", {"y"});
  a.root.children[0].children = {{"p", NodeKind::kAttribute, {}, {}},
                                 {"q", NodeKind::kAttribute, {}, {}}};
  b.root.children[0].children = {{"p", NodeKind::kAttribute, {}, {}}};
  CHECK(aggregate_similarity(a, b, o).score == Score(1, 2));
  CHECK(brute_force_aggregate(a, b, o) == Score(1, 2));
  b.root.children[0].children.clear();
  CHECK(aggregate_similarity(a, b, o).score == Score(0));
}
