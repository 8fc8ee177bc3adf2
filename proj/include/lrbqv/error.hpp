#pragma once

#include <stdexcept>
#include <string>

namespace lrbqv {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An operation was called on input outside its documented domain, for
  //! example a decider on a semigroup that is not a left regular band.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A search would exceed its fixed size or work cap and was refused.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text input. `line()` and `column()` are 1-based; zero means
  //! unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error(what), _line(line), _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace lrbqv
