#include "bcint/align.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include "bcint/normalize.hpp"

namespace bcint {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::kSynonym: return "synonym";
    case Rule::kHomonym: return "homonym";
    case Rule::kSharedConcept: return "shared-concept";
    case Rule::kDistinctConcepts: return "distinct-concepts";
    case Rule::kSyntactic: return "syntactic";
    case Rule::kAggregate: return "aggregate";
    case Rule::kUnmatched: return "unmatched";
  }
  return "syntactic";
}

int syntactic_similarity(std::string_view t1, std::string_view t2) {
  return normalize(t1) == normalize(t2) ? 1 : 0;
}

AtomicJudgement judge_atomic(std::string_view t1, std::string_view t2, const DomainOntology& o) {
  if (synonym_related(t1, t2, o)) return {1, Rule::kSynonym};
  if (homonym_related(t1, t2, o)) return {0, Rule::kHomonym};
  const auto c1 = term_concepts(t1, o);
  const auto c2 = term_concepts(t2, o);
  if (!c1.empty() && !c2.empty()) {
    std::vector<std::string> common;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                          std::back_inserter(common));
    return common.empty() ? AtomicJudgement{0, Rule::kDistinctConcepts}
                          : AtomicJudgement{1, Rule::kSharedConcept};
  }
  return {t1 == t2 ? 1 : 0, Rule::kSyntactic};
}

int semantic_similarity_atomic(std::string_view t1, std::string_view t2,
                               const DomainOntology& o) {
  return judge_atomic(normalize(t1), normalize(t2), o).value;
}

namespace {

using Weight = std::int64_t;

// Hungarian method on a square cost matrix (minimization). Returns the row ->
// column assignment together with dual potentials satisfying
// row_pot[i] + col_pot[j] <= cost[i][j], with equality on assigned pairs.
struct AssignmentSolution {
  std::vector<std::size_t> col_of_row;
  std::vector<Weight> row_pot;
  std::vector<Weight> col_pot;
};

AssignmentSolution solve_assignment(const std::vector<std::vector<Weight>>& cost) {
  const std::size_t n = cost.size();
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  std::vector<Weight> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Weight> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      Weight delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Weight cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentSolution out;
  out.col_of_row.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.col_of_row[p[j] - 1] = j - 1;
  out.row_pot.assign(u.begin() + 1, u.end());
  out.col_pot.assign(v.begin() + 1, v.end());
  return out;
}

}  // namespace

Matching max_weight_matching(const std::vector<std::vector<Score>>& cells) {
  const std::size_t rows = cells.size();
  const std::size_t cols = rows == 0 ? 0 : cells.front().size();
  if (rows == 0 || cols == 0) return {};

  // Scale to integers so the solver runs on exact integer weights.
  Weight scale = 1;
  for (const auto& row : cells) {
    for (const auto& c : row) scale = std::lcm(scale, c.denominator());
  }
  const std::size_t n = std::max(rows, cols);
  std::vector<std::vector<Weight>> cost(n, std::vector<Weight>(n, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      cost[i][j] = -(cells[i][j].numerator() * (scale / cells[i][j].denominator()));
    }
  }

  const AssignmentSolution sol = solve_assignment(cost);

  // Every optimal assignment is a perfect matching on the tight edges of an
  // optimal dual and vice versa. Fix rows in order, each to the smallest
  // column that still admits a tight perfect matching.
  auto tight = [&](std::size_t i, std::size_t j) {
    return sol.row_pot[i] + sol.col_pot[j] == cost[i][j];
  };
  std::vector<std::size_t> col_of_row = sol.col_of_row;
  std::vector<std::size_t> row_of_col(n);
  std::vector<char> fixed_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) row_of_col[col_of_row[i]] = i;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (fixed_col[j] || !tight(i, j)) continue;
      if (col_of_row[i] != j) {
        // Look for an alternating path that frees column j for row i: from
        // row_of_col[j] to col_of_row[i] over unfixed tight edges.
        const std::size_t start = row_of_col[j];
        const std::size_t goal = col_of_row[i];
        std::vector<std::size_t> via(n, kNone);
        std::deque<std::size_t> queue{start};
        bool found = false;
        while (!queue.empty() && !found) {
          const std::size_t x = queue.front();
          queue.pop_front();
          for (std::size_t y = 0; y < n; ++y) {
            if (fixed_col[y] || y == j || via[y] != kNone || !tight(x, y)) continue;
            via[y] = x;
            if (y == goal) {
              found = true;
              break;
            }
            queue.push_back(row_of_col[y]);
          }
        }
        if (!found) continue;
        std::size_t y = goal;
        for (;;) {
          const std::size_t x = via[y];
          const std::size_t previous = col_of_row[x];
          col_of_row[x] = y;
          row_of_col[y] = x;
          if (x == start) break;
          y = previous;
        }
        col_of_row[i] = j;
        row_of_col[j] = i;
      }
      fixed_col[j] = 1;
      break;
    }
  }

  Matching out;
  for (std::size_t i = 0; i < rows; ++i) {
    if (col_of_row[i] < cols) out.emplace_back(i, col_of_row[i]);
  }
  return out;
}

Score node_similarity(const ConceptNode& a, const ConceptNode& b, const DomainOntology& o) {
  if (a.is_leaf() && b.is_leaf()) return Score(judge_atomic(a.label, b.label, o).value);
  return aggregate_nodes(a, b, o).score;
}

AggregateResult aggregate_nodes(const ConceptNode& a, const ConceptNode& b,
                                const DomainOntology& o) {
  AggregateResult out;
  auto& m = out.matrix;
  for (const auto& c : a.children) m.left_labels.push_back(c.label);
  for (const auto& c : b.children) m.right_labels.push_back(c.label);

  if (a.children.empty() && b.children.empty()) {
    out.score = Score(judge_atomic(a.label, b.label, o).value);
    return out;
  }

  m.cells.assign(a.children.size(), std::vector<Score>(b.children.size()));
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    for (std::size_t j = 0; j < b.children.size(); ++j) {
      m.cells[i][j] = node_similarity(a.children[i], b.children[j], o);
    }
  }
  out.matching = max_weight_matching(m.cells);

  Score total(0);
  for (auto [i, j] : out.matching) total += m.cells[i][j];
  const auto n = static_cast<std::int64_t>(std::max(a.children.size(), b.children.size()));
  out.score = total / n;
  return out;
}

AggregateResult aggregate_similarity(const ComponentOntology& a, const ComponentOntology& b,
                                     const DomainOntology& o) {
  return aggregate_nodes(a.root, b.root, o);
}

}  // namespace bcint
