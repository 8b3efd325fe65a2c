#pragma once

#include <stdexcept>
#include <string>

namespace geocompress {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input data (ingestion and validation).
class InputError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments that violate an operation's contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace geocompress
