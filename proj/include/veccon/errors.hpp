#ifndef VECCON_ERRORS_HPP
#define VECCON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace veccon {

/// Malformed arguments: unknown vertex ids, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run past its size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A graph does not belong to the class a solver was written for.
class ClassificationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace veccon

#endif  // VECCON_ERRORS_HPP
