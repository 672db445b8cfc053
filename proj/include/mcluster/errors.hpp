#pragma once

#include <stdexcept>
#include <string>

namespace mcluster {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input (JSON, key lines, seed specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A quiver or angulation that violates the preconditions of an operation.
class InvalidQuiverError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured brute-force bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class IllegalMoveError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcluster
