#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcint {

enum class ErrorCode {
  kParse,
  kValidation,
  kUniqueness,
  kReference,
  kThesaurusConsistency,
  kNothingToIntegrate,
  kConsistency,
  kOracleSize,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. `details` carries
// one entry per individual problem (e.g. every violation found by a loader),
// while what() is the joined human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> details = {});

  ErrorCode code() const noexcept { return code_; }
  // The message without the "<code>: " prefix and without details.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<std::string> details_;
};

// Line/column (1-based) of a byte offset inside `text`.
struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};
TextPosition position_of(std::string_view text, std::size_t offset);

}  // namespace bcint
