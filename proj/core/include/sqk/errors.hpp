#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sqk {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, bad arguments or exceeded resource caps (CLI exit code 1).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical check failed: the input parses but is not what it claims to
/// be (CLI exit code 2).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

class DegreeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class OrderCapExceeded : public InputError {
 public:
  using InputError::InputError;
};

class SizeCapExceeded : public InputError {
 public:
  using InputError::InputError;
};

class InvalidFaceIndex : public InputError {
 public:
  using InputError::InputError;
};

enum class Axiom { Q1, Q2, Q3 };

/// A quandle axiom fails. The witness is the lexicographically first failing
/// tuple: (x) for Q1, (y, x1, x2) with x1 ▷ y = x2 ▷ y for Q2, (x, y, z) for Q3.
class AxiomViolation : public ValidationError {
 public:
  AxiomViolation(Axiom axiom, std::vector<int> witness);
  Axiom axiom;
  std::vector<int> witness;
};

class NotInvolution : public ValidationError {
 public:
  explicit NotInvolution(int element)
      : ValidationError("map is not an involution at element " +
                        std::to_string(element)),
        element(element) {}
  int element;
};

enum class GoodnessIdentity { RhoEquivariant, RhoInverts };

/// rho(x ▷ y) != rho(x) ▷ y (RhoEquivariant) or x ▷ rho(y) != x ▷^-1 y
/// (RhoInverts) at (x, y).
class GoodnessViolation : public ValidationError {
 public:
  GoodnessViolation(int x, int y, GoodnessIdentity identity);
  int x;
  int y;
  GoodnessIdentity identity;
};

class NotPermutation : public ValidationError {
 public:
  explicit NotPermutation(int x)
      : ValidationError("action of generator " + std::to_string(x) +
                        " is not a permutation"),
        x(x) {}
  int x;
};

class RelationViolation : public ValidationError {
 public:
  RelationViolation(int y, int x1, int x2)
      : ValidationError("conjugation relation fails at y=" + std::to_string(y) +
                        ", x1=" + std::to_string(x1) +
                        ", x2=" + std::to_string(x2)),
        y(y),
        x1(x1),
        x2(x2) {}
  int y;
  int x1;
  int x2;
};

class RhoViolation : public ValidationError {
 public:
  RhoViolation(int y, int x)
      : ValidationError("rho relation fails at y=" + std::to_string(y) +
                        ", x=" + std::to_string(x)),
        y(y),
        x(x) {}
  int y;
  int x;
};

class LabelCountError : public ValidationError {
 public:
  LabelCountError(int label, int count)
      : ValidationError("edge label " + std::to_string(label) + " appears " +
                        std::to_string(count) + " times (expected 2)"),
        label(label),
        count(count) {}
  int label;
  int count;
};

class OrientationInconsistency : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PlanarityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionViolated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace sqk
