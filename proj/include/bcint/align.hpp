#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcint/ontology.hpp"
#include "bcint/rational.hpp"
#include "bcint/transform.hpp"

namespace bcint {

// Which step of the decision ladder produced a value. kAggregate and
// kUnmatched only appear in evidence, never from the atomic measure.
enum class Rule {
  kSynonym,
  kHomonym,
  kSharedConcept,
  kDistinctConcepts,
  kSyntactic,
  kAggregate,
  kUnmatched,
};

std::string_view to_string(Rule rule);

struct AtomicJudgement {
  int value = 0;  // 0 or 1
  Rule rule = Rule::kSyntactic;
};

// 1 iff normalize(t1) == normalize(t2).
int syntactic_similarity(std::string_view t1, std::string_view t2);

// Atomic semantic similarity over already-normalized terms:
//   synonyms -> 1; homonyms -> 0; both in the ontology -> shared concept;
//   otherwise fall back to syntactic equality.
AtomicJudgement judge_atomic(std::string_view t1, std::string_view t2, const DomainOntology& o);

// Raw-string entry point; normalizes both terms first.
int semantic_similarity_atomic(std::string_view t1, std::string_view t2, const DomainOntology& o);

struct SimilarityMatrix {
  std::vector<std::string> left_labels;
  std::vector<std::string> right_labels;
  std::vector<std::vector<Score>> cells;  // left x right

  std::size_t rows() const { return left_labels.size(); }
  std::size_t cols() const { return right_labels.size(); }
  const Score& at(std::size_t i, std::size_t j) const { return cells[i][j]; }
};

// (left index, right index) pairs, sorted by left index.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

struct AggregateResult {
  Score score;
  Matching matching;
  SimilarityMatrix matrix;
};

// Maximum-weight assignment over a non-negative rational matrix. Pairs
// min(rows, cols) elements. Among all maximum-weight assignments the one whose
// pair sequence is lexicographically smallest is returned.
Matching max_weight_matching(const std::vector<std::vector<Score>>& cells);

// Similarity of two concept nodes: atomic for two leaves, otherwise the
// aggregate over their children.
Score node_similarity(const ConceptNode& a, const ConceptNode& b, const DomainOntology& o);

// Children of `a` against children of `b`: matched-weight sum over
// n = max(child counts). Two childless nodes score by their labels alone.
// Root labels never enter the score otherwise.
AggregateResult aggregate_nodes(const ConceptNode& a, const ConceptNode& b,
                                const DomainOntology& o);

AggregateResult aggregate_similarity(const ComponentOntology& a, const ComponentOntology& b,
                                     const DomainOntology& o);

}  // namespace bcint
