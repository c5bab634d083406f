#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace floer {

// Every library failure carries a short machine token (e.g. "parse_error")
// next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string token, const std::string& message)
      : std::runtime_error(message), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace floer
