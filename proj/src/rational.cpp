#include "bcint/rational.hpp"

namespace bcint {

std::string format_score(const Score& s) {
  if (s.denominator() == 1) return std::to_string(s.numerator());
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

}  // namespace bcint
