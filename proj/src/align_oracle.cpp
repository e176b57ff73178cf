#include "bcint/align_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bcint/error.hpp"

namespace bcint {

namespace {

Score leaf_or_tree(const ConceptNode& a, const ConceptNode& b, const DomainOntology& o) {
  if (a.is_leaf() && b.is_leaf()) return Score(judge_atomic(a.label, b.label, o).value);
  return brute_force_nodes(a, b, o);
}

}  // namespace

Score brute_force_nodes(const ConceptNode& a, const ConceptNode& b, const DomainOntology& o) {
  const auto& left = a.children;
  const auto& right = b.children;
  if (left.size() > kOracleMaxChildren || right.size() > kOracleMaxChildren) {
    throw Error(ErrorCode::kOracleSize, "brute force is limited to " +
                                            std::to_string(kOracleMaxChildren) +
                                            " children per side");
  }
  if (left.empty() && right.empty()) return Score(judge_atomic(a.label, b.label, o).value);

  const bool swap_sides = left.size() > right.size();
  const auto& small = swap_sides ? right : left;
  const auto& large = swap_sides ? left : right;

  std::vector<std::vector<Score>> w(small.size(), std::vector<Score>(large.size()));
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = 0; j < large.size(); ++j) {
      w[i][j] = swap_sides ? leaf_or_tree(large[j], small[i], o)
                           : leaf_or_tree(small[i], large[j], o);
    }
  }

  // Every permutation of the large side; its first |small| entries are the
  // images of the small side.
  std::vector<std::size_t> perm(large.size());
  std::iota(perm.begin(), perm.end(), 0);
  Score best(0);
  do {
    Score sum(0);
    for (std::size_t i = 0; i < small.size(); ++i) sum += w[i][perm[i]];
    best = std::max(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best / static_cast<std::int64_t>(large.size());
}

Score brute_force_aggregate(const ComponentOntology& a, const ComponentOntology& b,
                            const DomainOntology& o) {
  return brute_force_nodes(a.root, b.root, o);
}

}  // namespace bcint
