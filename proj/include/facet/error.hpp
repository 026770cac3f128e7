#pragma once

#include <stdexcept>
#include <string>

namespace facet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, ids out of range, invalid embeddings).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace facet
