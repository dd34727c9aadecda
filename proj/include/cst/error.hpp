#pragma once

#include <stdexcept>
#include <string>

namespace cst {

// Library-wide error type. Messages are single-line and prefixed with the
// subsystem, e.g. "corpus: duplicate id '42' at line 7".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace cst
