#include "bcint/normalize.hpp"

#include <cctype>

namespace bcint {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void trim_right(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string normalize(std::string_view term) {
  std::string out;
  out.reserve(term.size());
  bool pending_space = false;
  for (char c : term) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }

  if (out.ends_with("( )")) {
    out.resize(out.size() - 3);
  } else if (out.ends_with("()")) {
    out.resize(out.size() - 2);
  }
  trim_right(out);
  return out;
}

}  // namespace bcint
