#pragma once

#include <stdexcept>
#include <string>

namespace dcrit {

// Base of every error raised by the library. Callers that only care about
// "could not run" can catch this; tests match the concrete subclasses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class MissingEdge : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class NonLinearInput : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcrit
