#pragma once

#include <stdexcept>
#include <string>

namespace c2kit {

// Raised when an operation is applied outside its mathematical domain
// (disconnected input, wrong valency, missing triangles, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a brute-force enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an identity that must hold by theory fails; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Raised for malformed textual input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

#define C2KIT_CHECK(cond, msg)                                   \
  do {                                                           \
    if (!(cond)) throw ::c2kit::ConsistencyError(std::string(msg)); \
  } while (0)

}  // namespace c2kit
