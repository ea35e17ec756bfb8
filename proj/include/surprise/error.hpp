// surprise :: error types

#ifndef SURPRISE_ERROR_HPP_
#define SURPRISE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surprise {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax errors carry a 1-based column into the input text.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t column)
      : Error("column " + std::to_string(column) + ": " + message), column_(column) {}
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

// A modal formula reached an operation that only understands propositional formulas.
class ModalFormulaError : public Error {
public:
  ModalFormulaError() : Error("modal formula in propositional context") {}
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class UnknownWorldError : public Error {
public:
  explicit UnknownWorldError(const std::string& id) : Error("unknown world id '" + id + "'") {}
};

class FrameError : public Error {
public:
  using Error::Error;
};

class ModelFormatError : public Error {
public:
  using Error::Error;
};

} // namespace surprise

#endif // SURPRISE_ERROR_HPP_
