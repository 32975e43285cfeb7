#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grcob {

/// Error with a stable machine-readable code, e.g. "SourceTargetMismatch".
class GrcobError : public std::runtime_error {
 public:
  GrcobError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace grcob
