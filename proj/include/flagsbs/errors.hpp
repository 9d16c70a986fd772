#pragma once

#include <stdexcept>
#include <string>

namespace flagsbs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The section is a multiple of the incidence form and cuts no divisor.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

// x is an eigen-point of A^T, so the fiber solver has no unique answer.
class EigenPoint : public Error {
 public:
  using Error::Error;
};

class Inconclusive : public Error {
 public:
  Inconclusive(const std::string& what, double minimum) : Error(what), minimum_(minimum) {}
  double minimum() const { return minimum_; }

 private:
  double minimum_;
};

class AmbiguousSign : public Error {
 public:
  using Error::Error;
};

class NotOnY : public Error {
 public:
  NotOnY(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Broken internal invariant; never expected on valid input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flagsbs
