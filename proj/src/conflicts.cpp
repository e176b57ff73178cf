#include "bcint/conflicts.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bcint/error.hpp"

namespace bcint {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSynonymous: return "Synonymous";
    case Verdict::kHomonymNamingConflict: return "HomonymNamingConflict";
    case Verdict::kEqual: return "Equal";
    case Verdict::kDifferent: return "Different";
  }
  return "Different";
}

Verdict decide_verdict(int sigma_prime, const Score& sigma, bool roots_synonym,
                       bool roots_outside_ontology) {
  const bool full = sigma == Score(1);
  if (sigma_prime == 1) return full ? Verdict::kEqual : Verdict::kHomonymNamingConflict;
  if (full && (roots_synonym || roots_outside_ontology)) return Verdict::kSynonymous;
  return Verdict::kDifferent;
}

namespace {

std::vector<Finding> collect_evidence(const ComponentOntology& a, const ComponentOntology& b,
                                      const AggregateResult& agg, const DomainOntology& o) {
  std::vector<Finding> out;
  const auto& lc = a.root.children;
  const auto& rc = b.root.children;
  std::vector<char> left_used(lc.size(), 0), right_used(rc.size(), 0);
  for (auto [i, j] : agg.matching) {
    left_used[i] = right_used[j] = 1;
    Finding f;
    f.left_index = i;
    f.right_index = j;
    f.left = lc[i].label;
    f.right = rc[j].label;
    f.sigma = agg.matrix.at(i, j);
    f.rule = lc[i].is_leaf() && rc[j].is_leaf() ? judge_atomic(f.left, f.right, o).rule
                                                : Rule::kAggregate;
    out.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < lc.size(); ++i) {
    if (left_used[i]) continue;
    Finding f;
    f.left_index = i;
    f.left = lc[i].label;
    f.sigma = Score(0);
    f.rule = Rule::kUnmatched;
    out.push_back(std::move(f));
  }
  for (std::size_t j = 0; j < rc.size(); ++j) {
    if (right_used[j]) continue;
    Finding f;
    f.right_index = j;
    f.right = rc[j].label;
    f.sigma = Score(0);
    f.rule = Rule::kUnmatched;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

PairVerdict classify_pair(const ComponentOntology& a, const ComponentOntology& b,
                          const DomainOntology& o) {
  PairVerdict v;
  v.left = a.source;
  v.right = b.source;
  v.left_label = a.root.label;
  v.right_label = b.root.label;
  v.sigma_prime = a.root.label == b.root.label ? 1 : 0;
  AggregateResult agg = aggregate_similarity(a, b, o);
  v.sigma = agg.score;
  v.roots_synonym = synonym_related(a.root.label, b.root.label, o);
  const bool outside = !in_ontology(a.root.label, o) && !in_ontology(b.root.label, o);
  v.verdict = decide_verdict(v.sigma_prime, v.sigma, v.roots_synonym, outside);
  v.evidence = collect_evidence(a, b, agg, o);
  v.matching = std::move(agg.matching);
  return v;
}

VerdictCounts count_verdicts(const std::vector<PairVerdict>& verdicts) {
  VerdictCounts c;
  for (const auto& v : verdicts) {
    switch (v.verdict) {
      case Verdict::kSynonymous: ++c.synonymous; break;
      case Verdict::kHomonymNamingConflict: ++c.homonym_naming_conflict; break;
      case Verdict::kEqual: ++c.equal; break;
      case Verdict::kDifferent: ++c.different; break;
    }
  }
  return c;
}

ConflictReport build_report(const OntologySet& set, const DomainOntology& o) {
  std::set<std::string> systems(set.systems.begin(), set.systems.end());
  for (const auto& ont : set.ontologies) systems.insert(ont.source.system_id);
  if (systems.size() < 2) {
    throw Error(ErrorCode::kNothingToIntegrate,
                "at least two systems are needed, got " + std::to_string(systems.size()));
  }

  std::vector<const ComponentOntology*> sorted;
  sorted.reserve(set.ontologies.size());
  for (const auto& ont : set.ontologies) sorted.push_back(&ont);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* x, const auto* y) { return x->source < y->source; });

  ConflictReport report;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[i]->source.system_id == sorted[j]->source.system_id) continue;
      report.verdicts.push_back(classify_pair(*sorted[i], *sorted[j], o));
    }
  }
  std::sort(report.verdicts.begin(), report.verdicts.end(),
            [](const PairVerdict& x, const PairVerdict& y) {
              return std::tie(x.left, x.right) < std::tie(y.left, y.right);
            });
  report.counts = count_verdicts(report.verdicts);
  return report;
}

}  // namespace bcint
