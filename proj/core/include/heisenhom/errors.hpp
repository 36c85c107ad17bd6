#pragma once

#include <stdexcept>
#include <string>

namespace heisenhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when [a,[b,c]] + [b,[c,a]] + [c,[a,b]] != 0 for some generator triple.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t a, std::size_t b, std::size_t c)
      : Error("Jacobi identity fails on generators (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        a_(a), b_(b), c_(c) {}

  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t c() const { return c_; }

 private:
  std::size_t a_, b_, c_;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class ResourceCap : public Error {
 public:
  using Error::Error;
};

class NotCritical : public Error {
 public:
  using Error::Error;
};

class OutOfStatedRange : public Error {
 public:
  using Error::Error;
};

}  // namespace heisenhom
