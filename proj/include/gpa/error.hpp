#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpa {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

// No attractiveness shift reproduces the requested degree coefficient.
class InfeasibleParams : public Error {
public:
  using Error::Error;
};

class InsufficientData : public Error {
public:
  using Error::Error;
};

class TreeTooLarge : public Error {
public:
  using Error::Error;
};

class DegreeUndefined : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  FormatError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  explicit FormatError(const std::string& what) : FormatError(what, 0) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_ = 0;
};

} // namespace gpa
