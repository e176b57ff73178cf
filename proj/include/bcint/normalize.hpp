#pragma once

#include <string>
#include <string_view>

namespace bcint {

// Canonical surface form of a term: ASCII case-folded, trimmed, whitespace
// runs collapsed to one space, and a single trailing "()" or "( )" removed.
//   "Reading ()"     -> "reading"
//   "  First  Name " -> "first name"
std::string normalize(std::string_view term);

}  // namespace bcint
