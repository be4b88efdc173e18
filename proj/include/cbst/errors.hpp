#pragma once

#include <stdexcept>

namespace cbst {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key already present in the tree (or across trees being merged).
class DuplicateKeyError : public Error {
 public:
  using Error::Error;
};

class KeyNotFoundError : public Error {
 public:
  using Error::Error;
};

// A NodeRef names a node that has been erased since the handle was taken.
class StaleHandleError : public Error {
 public:
  using Error::Error;
};

// Ordinal operation requested on a plain-mode tree.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Input sequence (keys to build, queries to batch) violates required order.
class NotSortedError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a boundary formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation precondition that is checked.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace cbst
