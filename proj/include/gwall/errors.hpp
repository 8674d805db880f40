#pragma once

#include <stdexcept>
#include <string>

namespace gwall {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths disagree with the surface's Picard rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero rank, a >= b, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The oracle admits no character satisfying the extremal conditions.
class NoCandidateError : public Error {
 public:
  using Error::Error;
};

}  // namespace gwall
