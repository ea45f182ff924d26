#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obaire
{
  /// Base class of every error thrown by the library.
  class error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed input: unknown symbols, alphabet mismatches, ill-formed
  /// automata.
  class input_error : public error
  {
  public:
    using error::error;
  };

  /// Syntax error in a textual file, with its 1-based position.
  class parse_error : public input_error
  {
  public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
      : input_error("line " + std::to_string(line) + ", column "
                    + std::to_string(column) + ": " + what),
        line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
  };

  /// A construction hit its state cap. Never a silent wrong answer.
  class capacity_error : public error
  {
  public:
    using error::error;
  };

  /// An operation was called outside its precondition (e.g. to_dba on a
  /// language that is not Pi^0_2).
  class precondition_error : public error
  {
  public:
    using error::error;
  };

  /// A post-construction self check failed. Indicates a bug.
  class construction_error : public error
  {
  public:
    using error::error;
  };

  /// evaluate() on a word outside the domain of the transducer.
  class domain_error : public error
  {
  public:
    using error::error;
  };

  /// Two distinct outputs were found for the same input.
  class functionality_error : public error
  {
  public:
    using error::error;
  };

  /// Cooperative cancellation was requested.
  class cancelled_error : public error
  {
  public:
    using error::error;
  };
}
