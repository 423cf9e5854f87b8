#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 line, deck file, CLI argument).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An input is outside the supported order range for an operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

class VertexRangeError : public Error {
 public:
  using Error::Error;
};

/// A search or output bound was hit. Never reported as a wrong answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The multiset of cards cannot be the deck of any graph.
class IllegitimateDeckError : public Error {
 public:
  using Error::Error;
};

class WitnessShapeError : public Error {
 public:
  using Error::Error;
};

class ProfileMismatchError : public Error {
 public:
  using Error::Error;
};

/// Constructor arguments violate a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace recon
