#pragma once

#include <stdexcept>
#include <string>

namespace semiprob {

// Base class for all input/precondition failures raised by this library.
// Every subclass carries a concrete witness in its message (and as fields
// where callers need them programmatically).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadEntryError : Error {
  int row, col;
  long long value;
  BadEntryError(int r, int c, long long v)
      : Error("table entry out of range at row " + std::to_string(r) + ", col "
              + std::to_string(c) + ": " + std::to_string(v)),
        row(r),
        col(c),
        value(v) {}
};

struct NotAssociativeError : Error {
  int a, b, c;
  NotAssociativeError(int a_, int b_, int c_)
      : Error("not associative: witness (a,b,c) = (" + std::to_string(a_) + ","
              + std::to_string(b_) + "," + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct EmptyPartitionError : Error {
  EmptyPartitionError() : Error("partition is empty") {}
};

struct PairOutOfRangeError : Error {
  int first, second;
  PairOutOfRangeError(int a, int b)
      : Error("pair (" + std::to_string(a) + "," + std::to_string(b)
              + ") out of range"),
        first(a),
        second(b) {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(int lhs, int rhs)
      : Error("matrix dimensions differ: " + std::to_string(lhs) + " vs "
              + std::to_string(rhs)) {}
};

struct SizeMismatchError : Error {
  SizeMismatchError(int expected, int got)
      : Error("size mismatch: expected " + std::to_string(expected) + ", got "
              + std::to_string(got)) {}
};

struct TooLargeError : Error {
  int n;
  TooLargeError(int n_, int limit, const std::string& what_op)
      : Error(what_op + ": n = " + std::to_string(n_)
              + " exceeds supported limit " + std::to_string(limit)),
        n(n_) {}
};

// (a,b) in the relation but (xa,xb) — or (ax,bx) — is not; `left` means the
// violating multiplication was on the left.
struct NotACongruenceError : Error {
  int a, b, x;
  bool left;
  NotACongruenceError(int a_, int b_, int x_, bool left_)
      : Error("not a congruence: (" + std::to_string(a_) + ","
              + std::to_string(b_) + ") related but "
              + (left_ ? ("x*a, x*b with x = " + std::to_string(x_))
                       : ("a*x, b*x with x = " + std::to_string(x_)))
              + " are not"),
        a(a_),
        b(b_),
        x(x_),
        left(left_) {}
};

struct NotAnIdealError : Error {
  int member, multiplier;
  bool left;  // true: multiplier * member escapes; false: member * multiplier
  NotAnIdealError(int i, int a, bool left_)
      : Error("not an ideal: "
              + (left_ ? (std::to_string(a) + " * " + std::to_string(i))
                       : (std::to_string(i) + " * " + std::to_string(a)))
              + " escapes the set"),
        member(i),
        multiplier(a),
        left(left_) {}
};

struct NotNestedError : Error {
  int a, b;
  NotNestedError(int a_, int b_)
      : Error("relations not nested: (" + std::to_string(a_) + ","
              + std::to_string(b_)
              + ") lies in the finer relation but not the coarser"),
        a(a_),
        b(b_) {}
};

struct CoherenceViolationError : Error {
  int x, y, z, a;
  CoherenceViolationError(int x_, int y_, int z_, int a_)
      : Error("fiber maps are not coherent at base triple (" + std::to_string(x_)
              + "," + std::to_string(y_) + "," + std::to_string(z_)
              + "), fiber element " + std::to_string(a_)),
        x(x_),
        y(y_),
        z(z_),
        a(a_) {}
};

struct PhiNotFixingError : Error {
  int e;
  explicit PhiNotFixingError(int e_)
      : Error("phi does not fix left zero element " + std::to_string(e_)),
        e(e_) {}
};

struct InvalidSpecError : Error {
  explicit InvalidSpecError(const std::string& msg)
      : Error("invalid construction spec: " + msg) {}
};

struct UnknownCheckError : Error {
  explicit UnknownCheckError(const std::string& id)
      : Error("unknown check id: " + id) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace semiprob
