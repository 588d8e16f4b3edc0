#pragma once

#include <stdexcept>
#include <string>

namespace colocal {

// Syntax error in a quiver description file.  Lines and columns are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// An operation was invoked outside its domain (e.g. a lattice request for an
// algebra that is not of colocal type, or string enumeration on a
// non-admissible presentation).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configurable size guard was exceeded.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed.  This is never a valid outcome for any
// input; it signals an implementation bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace colocal
