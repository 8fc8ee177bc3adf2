#pragma once

#include <iosfwd>
#include <string>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  // Text format:
  //
  //   # comment
  //   elements: n1 n2 ... nk
  //   <k names: row n1>
  //   ...
  //
  // Row x lists the products x.y for y in column order. Blank lines and lines
  // whose first non-blank character is '#' are ignored.

  //! Throws ParseError (with a line number) on malformed text. Unknown names
  //! and shape problems are syntax errors here; closure is guaranteed by
  //! construction, associativity is left to `validate`.
  RawTable parse_table(std::istream& in);
  RawTable parse_table(std::string const& text);

  //! parse_table followed by FiniteSemigroup::make.
  FiniteSemigroup read_semigroup(std::istream& in);
  FiniteSemigroup read_semigroup(std::string const& text);

  std::string format_table(FiniteSemigroup const& S);

}  // namespace lrbqv
