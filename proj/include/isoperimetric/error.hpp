#pragma once

#include <stdexcept>
#include <string>

namespace isoperimetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group table or graph file that fails its axioms.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// An operation called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace isoperimetric
