#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace bcint {

// Similarity values are exact. Denominators are bounded by element counts, so
// 64-bit components are ample.
using Score = boost::rational<std::int64_t>;

// "1", "0", "1/2", never a decimal.
std::string format_score(const Score& s);

}  // namespace bcint
