#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critorbit {

// Base for every failure raised by the library. Callers that only care about
// "the computation could not produce a value" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class RootFindingError : public Error {
 public:
  using Error::Error;
};

class DegenerateMapError : public Error {
 public:
  using Error::Error;
};

class CriticalRelationError : public Error {
 public:
  CriticalRelationError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InvalidOrbitError : public Error {
 public:
  using Error::Error;
};

class NotSummableError : public Error {
 public:
  using Error::Error;
};

class PoleProximityError : public Error {
 public:
  using Error::Error;
};

class NoWitnessError : public Error {
 public:
  using Error::Error;
};

class ParabolicCycleError : public Error {
 public:
  using Error::Error;
};

class InvalidCycleError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// Violated precondition on an argument (empty region, n < 1, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace critorbit
