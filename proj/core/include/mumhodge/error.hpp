#pragma once

#include <stdexcept>
#include <string>

namespace mumhodge {

enum class ErrorKind {
  domain,       // precondition violated by the mathematical input
  parse,        // malformed document or number string
  precision,    // working precision exhausted
  recognition,  // exact recognition of a numeric quantity failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  explicit Error(const std::string& what) : Error(ErrorKind::domain, what) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mumhodge
