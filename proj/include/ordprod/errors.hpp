#pragma once

#include <stdexcept>
#include <string>

namespace ordprod {

/// Thrown on malformed element literals and configuration documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string message)
      : std::runtime_error(std::move(message)) {}
};

}  // namespace ordprod
