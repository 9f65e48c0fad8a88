#pragma once

#include <stdexcept>
#include <string>

namespace moymf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct CutoffExceeded : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ColorMismatch : Error { using Error::Error; };
struct IncompatibleBases : Error { using Error::Error; };
struct InhomogeneousRow : Error { using Error::Error; };
struct ZeroScalar : Error { using Error::Error; };
struct PotentialMismatch : Error { using Error::Error; };
struct RegularityUnverified : Error { using Error::Error; };
struct ConditionUnmet : Error { using Error::Error; };
struct ColorConstraintViolation : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct Irreducible : Error { using Error::Error; };

struct SyntaxError : Error {
  SyntaxError(int line, int column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace moymf
