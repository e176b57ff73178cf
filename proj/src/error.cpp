#include "bcint/error.hpp"

#include <algorithm>

namespace bcint {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kUniqueness: return "uniqueness error";
    case ErrorCode::kReference: return "reference error";
    case ErrorCode::kThesaurusConsistency: return "thesaurus-consistency error";
    case ErrorCode::kNothingToIntegrate: return "nothing to integrate";
    case ErrorCode::kConsistency: return "consistency error";
    case ErrorCode::kOracleSize: return "oracle-size error";
    case ErrorCode::kIo: return "io error";
  }
  return "error";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    const std::vector<std::string>& details) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  for (const auto& d : details) {
    out += "\n  - ";
    out += d;
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::vector<std::string> details)
    : std::runtime_error(compose(code, message, details)),
      code_(code),
      message_(std::move(message)),
      details_(std::move(details)) {}

TextPosition position_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  TextPosition pos;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

}  // namespace bcint
