#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace plesken {

using Json = nlohmann::ordered_json;

/// Domain error raised by every module.
///
/// `code` is a stable machine-readable identifier ("NotAssociative",
/// "JacobiViolation", ...). `witness` carries the indices or values that
/// demonstrate the failure and is what the CLI prints under "witness".
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, Json witness = Json::object())
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const Json& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  Json witness_;
};

}  // namespace plesken
