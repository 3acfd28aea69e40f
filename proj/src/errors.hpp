#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace cmline {

enum class ErrorKind {
  Parse,          // malformed input document or rational literal
  Capability,     // requested quantity needs data the family does not carry
  Precondition,   // argument or dimension requirement violated
  Inconsistency,  // two independent computation routes disagree
  Pole,           // rational-function evaluation at a zero of the denominator
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Error(ErrorKind kind, const std::string& msg, nlohmann::json detail)
      : std::runtime_error(msg), kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  nlohmann::json detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, nlohmann::json detail) {
  throw Error(kind, msg, std::move(detail));
}

}  // namespace cmline
