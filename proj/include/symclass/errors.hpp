#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symclass {

/// Base class for all rejections of malformed input. Anything else that
/// escapes the library (std::logic_error) is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t lhs, std::size_t rhs)
      : Error(what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}
  std::size_t lhs() const { return lhs_; }
  std::size_t rhs() const { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace symclass
