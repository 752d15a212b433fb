#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schur {

// Base of every error raised by the library. Each subclass names the
// violated precondition or axiom; the message carries the witness.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyGenerators : public Error {
 public:
  EmptyGenerators() : Error("generator set is empty") {}
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class IdentityNotSingleton : public Error {
 public:
  using Error::Error;
};

class NotInverseClosed : public Error {
 public:
  NotInverseClosed(std::size_t class_index, const std::string& what)
      : Error(what), class_index_(class_index) {}
  std::size_t class_index() const { return class_index_; }

 private:
  std::size_t class_index_;
};

class NotClosedUnderProduct : public Error {
 public:
  NotClosedUnderProduct(std::size_t i, std::size_t j, std::uint32_t x,
                        std::uint32_t y, const std::string& what)
      : Error(what), i_(i), j_(j), x_(x), y_(y) {}
  std::size_t left_class() const { return i_; }
  std::size_t right_class() const { return j_; }
  // Two elements of one class that receive different multiplicities.
  std::pair<std::uint32_t, std::uint32_t> witness() const { return {x_, y_}; }

 private:
  std::size_t i_, j_;
  std::uint32_t x_, y_;
};

class NotAnASubgroup : public Error {
 public:
  using Error::Error;
};

class NotAThinElement : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  NotAnAutomorphism(std::uint32_t x, std::uint32_t y, const std::string& what)
      : Error(what), x_(x), y_(y) {}
  std::pair<std::uint32_t, std::uint32_t> witness() const { return {x_, y_}; }

 private:
  std::uint32_t x_, y_;
};

class InconsistentConstant : public Error {
 public:
  using Error::Error;
};

class EmptyBlock : public Error {
 public:
  using Error::Error;
};

class ConditionsABRequired : public Error {
 public:
  using Error::Error;
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class WrongResidueClass : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

class Inapplicable : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure of the automorphism search; never expected.
class StabilizerOrbitNotInClass : public Error {
 public:
  using Error::Error;
};

}  // namespace schur
