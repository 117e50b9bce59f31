#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nqga {

/// Gene sequence is not a permutation of 1..N.
class PermutationError : public std::invalid_argument {
 public:
  PermutationError(std::vector<int> duplicated, std::vector<int> missing, std::size_t length);

  const std::vector<int>& duplicated() const noexcept { return duplicated_; }
  const std::vector<int>& missing() const noexcept { return missing_; }

 private:
  std::vector<int> duplicated_;
  std::vector<int> missing_;
};

/// Malformed tuple text. `position` is the 1-based element index of the bad token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, std::string token, const std::string& reason);

  std::size_t position() const noexcept { return position_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

class OperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RenderLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace nqga
