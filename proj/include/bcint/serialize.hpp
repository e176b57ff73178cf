#pragma once

#include <string>

#include "bcint/align.hpp"
#include "bcint/conflicts.hpp"
#include "bcint/merge.hpp"

namespace bcint {

// Output documents. All are deterministic: identical inputs give identical
// bytes. Schemas are described in docs/formats.md.
std::string report_to_json(const ConflictReport& report);
std::string representation_to_json(const RepresentationOntology& r);
std::string aggregate_to_json(const AggregateResult& result, const ComponentRef& left,
                              const ComponentRef& right);

// Fixed-width verdict table plus summary counts. With `verbose`, each row is
// followed by its evidence lines.
std::string format_report_text(const ConflictReport& report, bool verbose);

// Labelled similarity matrix followed by "score: p/q".
std::string format_matrix_text(const AggregateResult& result, const ComponentRef& left,
                               const ComponentRef& right);

}  // namespace bcint
