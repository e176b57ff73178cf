#pragma once

#include <cstddef>

#include "bcint/align.hpp"

namespace bcint {

inline constexpr std::size_t kOracleMaxChildren = 8;

// Exhaustive reference for aggregate_similarity: enumerates every injective
// assignment of the smaller child list into the larger one and keeps the best
// matched-weight sum, recursing the same way for nested children. Throws
// Error(kOracleSize) when either side has more than kOracleMaxChildren
// children at any level.
Score brute_force_aggregate(const ComponentOntology& a, const ComponentOntology& b,
                            const DomainOntology& o);

Score brute_force_nodes(const ConceptNode& a, const ConceptNode& b, const DomainOntology& o);

}  // namespace bcint
