#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wealthsim {

enum class ConfigErrorKind { Syntax, UnknownKey, MissingKey, BadType, OutOfRange };

// Problem in a scenario or sweep document. `key` is the dotted path of the
// offending entry, empty for document-level syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, std::string key, const std::string& message)
      : std::runtime_error(message), kind_(kind), key_(std::move(key)) {}

  ConfigErrorKind kind() const { return kind_; }
  const std::string& key() const { return key_; }

 private:
  ConfigErrorKind kind_;
  std::string key_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wealthsim
