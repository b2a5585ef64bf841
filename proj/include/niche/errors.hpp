#pragma once

#include <stdexcept>
#include <string>

namespace niche {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class NonLatticePoint : public Error {
 public:
  using Error::Error;
};

/// Out-of-domain size parameter (k < 2, n < 4, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidSequence : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle asked to run on a graph beyond its size limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// The witness construction disagrees with the induced-cycle verifier.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace niche
