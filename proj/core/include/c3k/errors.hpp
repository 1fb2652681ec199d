#pragma once

#include <stdexcept>
#include <string>

namespace c3k {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a real function (log of a nonpositive
// value, x/y outside an identity's window, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// x == y in the (B)/(C) level identities.
class SingularInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class NotGeometric : public Error {
 public:
  using Error::Error;
};

class MaxTermsExceeded : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace c3k
