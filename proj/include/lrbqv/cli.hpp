#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv::cli {

  //! Exit codes: 0 affirmative or valid, 1 negative verdict (with the witness
  //! on `out`), 2 usage or input error (diagnostic on `err`).
  enum ExitCode : int { ok = 0, negative = 1, input_error = 2 };

  //! Builds a semigroup from a generator name: L, ZL, Z, coord:<n>,
  //! zcoord:<n>, F:<n>, Fp:<n>, B:<n>, free:<k>. Throws PreconditionError on
  //! an unknown name.
  FiniteSemigroup generate(std::string const& spec);

  //! `args` excludes the program name. Tables are read from the named file,
  //! or from `in` when the file argument is absent or "-".
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace lrbqv::cli
