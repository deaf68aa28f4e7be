#pragma once

#include <stdexcept>
#include <string>

namespace hanoi {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched degree, arity or depth between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A vertex or level beyond the truncation depth of a portrait or quotient.
class DepthError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class NotSubgroupError : public Error {
 public:
  using Error::Error;
};

class InvalidBlocksError : public Error {
 public:
  using Error::Error;
};

class NotInStabilizerError : public Error {
 public:
  using Error::Error;
};

// A computation that would exceed the supported degree or state-space size.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hanoi
