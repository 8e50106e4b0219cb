#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfs {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class IncompatibleModulus : public Error {
 public:
  IncompatibleModulus(int a, int b)
      : Error("incompatible root-of-unity orders p=" + std::to_string(a) + " and p=" + std::to_string(b)) {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(int p) : Error("p must be an odd integer >= 3, got " + std::to_string(p)) {}
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name) : Error("unknown generator '" + name + "'") {}
};

class NegativeExponent : public Error {
 public:
  explicit NegativeExponent(const std::string& name)
      : Error("negative exponent on non-invertible generator '" + name + "'") {}
};

class NonGrassmannInput : public Error {
 public:
  NonGrassmannInput() : Error("Grassmann integral requires input free of z+, z-, lam and exp charges") {}
};

class DivergentIntegral : public Error {
 public:
  explicit DivergentIntegral(const std::string& what) : Error("divergent integral: " + what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

class OnAxis : public Error {
 public:
  OnAxis() : Error("point lies on a light-cone axis (z+ * z- == 0)") {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double achieved)
      : Error("quadrature did not converge: " + what + " (achieved error " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : Error("syntax error at position " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

/// Throws InvalidOrder unless p is odd and at least 3.
inline void check_order(int p) {
  if (p < 3 || p % 2 == 0) throw InvalidOrder(p);
}

}  // namespace qfs
