#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydecomp {

/// Operands belong to different coefficient domains (e.g. Z[sqrt(-5)] and Z[sqrt(-6)]).
class DomainMismatch : public std::logic_error {
 public:
  explicit DomainMismatch(const std::string& what) : std::logic_error(what) {}
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Syntax error in a ring descriptor or polynomial expression.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polydecomp
