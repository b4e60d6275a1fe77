#pragma once

#include <stdexcept>
#include <string>

namespace tvsum {

// Exception families map onto CLI exit codes: validation 2, domain 3, I/O 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tvsum
