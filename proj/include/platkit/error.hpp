#pragma once

#include <stdexcept>
#include <string>

namespace platkit {

/// Precondition or parse failure. `code` is a short machine-readable tag
/// ("parse", "precondition", "not_found", ...) surfaced by the CLI and service.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace platkit
