#pragma once

#include <stdexcept>
#include <string>

namespace harbourne {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on inputs outside its domain (f_0 = 0, d < 3, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A theorem was evaluated on data that does not satisfy its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Two algebraically equal routes disagreed. Always a bug or corrupt input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (documents, line files, rational literals).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a name that is not registered (catalog entries, bound names).
class UnknownEntryError : public Error {
 public:
  using Error::Error;
};

}  // namespace harbourne
