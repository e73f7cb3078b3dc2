#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A quotient would need a, a_L or γ in its denominator.
class DenominatorNotSUnivariate : public Error {
 public:
  explicit DenominatorNotSUnivariate(const std::string& what) : Error(what) {}
};

/// An operation restricted to ℤ[s^{±1}] received a polynomial in a, a_L or γ.
class NotSUnivariate : public Error {
 public:
  explicit NotSUnivariate(const std::string& what) : Error(what) {}
};

class IllegalSubstitution : public Error {
 public:
  explicit IllegalSubstitution(const std::string& what) : Error(what) {}
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(const std::string& what) : Error(what) {}
};

class CellNotInPartition : public Error {
 public:
  explicit CellNotInPartition(const std::string& what) : Error(what) {}
};

class EmptyPartition : public Error {
 public:
  explicit EmptyPartition(const std::string& what) : Error(what) {}
};

class NoSolution : public Error {
 public:
  explicit NoSolution(const std::string& what) : Error(what) {}
};

class SerializationError : public Error {
 public:
  explicit SerializationError(const std::string& what) : Error(what) {}
};

}  // namespace skein
