#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point outside the declared domain of a function, or an operation whose
/// operand is not admissible (e.g. inverting zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A real (or numerically real) quaternion was given where a slice unit
/// I_q is required.
class NotASlicePoint : public Error {
 public:
  using Error::Error;
};

/// Evaluation on the zero set of a symmetrization. Carries the sphere
/// x + y S that contains the offending point.
class SingularPoint : public Error {
 public:
  SingularPoint(const std::string& what, double x, double y)
      : Error(what), x_(x), y_(y) {}
  double sphere_x() const { return x_; }
  double sphere_y() const { return y_; }

 private:
  double x_;
  double y_;
};

/// f(q) = 0 in the composition form of the regular product.
class ZeroBase : public Error {
 public:
  using Error::Error;
};

class RealTraceMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateUnits : public Error {
 public:
  using Error::Error;
};

class NoRealTrace : public Error {
 public:
  using Error::Error;
};

class DomainNotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Violated operation precondition (non-orthogonal units, mismatched
/// polynomial centers, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace slicereg
